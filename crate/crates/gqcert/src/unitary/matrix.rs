//! 3x3 matrix algebra over F_{q^2} and Hermitian form bookkeeping.
//!
//! Matrices are row-major `[Fe; 9]`. Membership in SU(3,q) for a Gram
//! matrix W means det A = 1 and A W conj(A)^T = W.

use super::field::{Fe, Gf};

pub type Mat = [Fe; 9];

pub const fn mat_zero() -> Mat {
    [0; 9]
}

pub fn identity(gf: &Gf) -> Mat {
    let mut m = mat_zero();
    m[0] = gf.one();
    m[4] = gf.one();
    m[8] = gf.one();
    m
}

pub fn mul(gf: &Gf, a: &Mat, b: &Mat) -> Mat {
    let mut out = mat_zero();
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = 0u8;
            for k in 0..3 {
                acc = gf.add(acc, gf.mul(a[3 * i + k], b[3 * k + j]));
            }
            out[3 * i + j] = acc;
        }
    }
    out
}

pub fn conj_transpose(gf: &Gf, a: &Mat) -> Mat {
    let mut out = mat_zero();
    for i in 0..3 {
        for j in 0..3 {
            out[3 * i + j] = gf.conj(a[3 * j + i]);
        }
    }
    out
}

pub fn scalar_mul(gf: &Gf, c: Fe, a: &Mat) -> Mat {
    let mut out = *a;
    for e in out.iter_mut() {
        *e = gf.mul(c, *e);
    }
    out
}

pub fn det(gf: &Gf, a: &Mat) -> Fe {
    let m = |i: usize, j: usize| a[3 * i + j];
    let mut acc = 0u8;
    let term = |x: Fe, y: Fe, z: Fe| gf.mul(gf.mul(x, y), z);
    acc = gf.add(acc, term(m(0, 0), m(1, 1), m(2, 2)));
    acc = gf.add(acc, term(m(0, 1), m(1, 2), m(2, 0)));
    acc = gf.add(acc, term(m(0, 2), m(1, 0), m(2, 1)));
    acc = gf.sub(acc, term(m(0, 2), m(1, 1), m(2, 0)));
    acc = gf.sub(acc, term(m(0, 0), m(1, 2), m(2, 1)));
    acc = gf.sub(acc, term(m(0, 1), m(1, 0), m(2, 2)));
    acc
}

/// Inverse via the adjugate; `None` for singular input.
pub fn inverse(gf: &Gf, a: &Mat) -> Option<Mat> {
    let d = det(gf, a);
    if d == 0 {
        return None;
    }
    let dinv = gf.inv(d);
    let m = |i: usize, j: usize| a[3 * i + j];
    let cof = |i: usize, j: usize| {
        let (r0, r1) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let (c0, c1) = match j {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let minor = gf.sub(gf.mul(m(r0, c0), m(r1, c1)), gf.mul(m(r0, c1), m(r1, c0)));
        if (i + j) % 2 == 0 {
            minor
        } else {
            gf.neg(minor)
        }
    };
    let mut out = mat_zero();
    for i in 0..3 {
        for j in 0..3 {
            // adjugate is the transposed cofactor matrix
            out[3 * i + j] = gf.mul(dinv, cof(j, i));
        }
    }
    Some(out)
}

pub fn is_hermitian(gf: &Gf, w: &Mat) -> bool {
    *w == conj_transpose(gf, w)
}

pub fn preserves_form(gf: &Gf, a: &Mat, w: &Mat) -> bool {
    mul(gf, &mul(gf, a, w), &conj_transpose(gf, a)) == *w
}

pub fn is_special_unitary(gf: &Gf, a: &Mat, w: &Mat) -> bool {
    det(gf, a) == gf.one() && preserves_form(gf, a, w)
}

/// The Hermitian form value h(x, y) = x W conj(y)^T for row vectors.
pub fn form_value(gf: &Gf, w: &Mat, x: &[Fe; 3], y: &[Fe; 3]) -> Fe {
    let mut acc = 0u8;
    for i in 0..3 {
        for j in 0..3 {
            acc = gf.add(acc, gf.mul(gf.mul(x[i], w[3 * i + j]), gf.conj(y[j])));
        }
    }
    acc
}

fn all_vectors(gf: &Gf) -> Vec<[Fe; 3]> {
    let n = gf.size() as u8;
    let mut out = Vec::with_capacity(gf.size().pow(3));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Gram-Schmidt for a nonsingular Hermitian form: returns C (rows an
/// orthonormal basis) with C W conj(C)^T = I. Always exists over a finite
/// field in odd dimension.
pub fn congruence_to_identity(gf: &Gf, w: &Mat) -> Mat {
    assert!(is_hermitian(gf, w) && det(gf, w) != 0, "need a nonsingular Hermitian form");
    let vectors = all_vectors(gf);
    let mut rows: Vec<[Fe; 3]> = Vec::new();
    for _ in 0..3 {
        // next vector orthogonal to the chosen rows with nonzero norm
        let v = vectors
            .iter()
            .find(|v| {
                form_value(gf, w, v, v) != 0 && rows.iter().all(|r| form_value(gf, w, v, r) == 0)
            })
            .expect("anisotropic vector exists in the orthogonal complement");
        // scale so the norm becomes 1: norm map is onto F_q^*
        let nv = form_value(gf, w, v, v);
        let lambda = gf
            .elements()
            .find(|&l| l != 0 && gf.norm(l) == gf.inv(nv))
            .expect("norm is surjective onto the base field");
        rows.push([gf.mul(lambda, v[0]), gf.mul(lambda, v[1]), gf.mul(lambda, v[2])]);
    }
    let mut c = mat_zero();
    for (i, r) in rows.iter().enumerate() {
        c[3 * i..3 * i + 3].copy_from_slice(r);
    }
    debug_assert_eq!(mul(gf, &mul(gf, &c, w), &conj_transpose(gf, &c)), identity(gf));
    c
}

/// D with D W1 conj(D)^T = W2; conjugation by D maps SU(3,q)_{W1} to
/// SU(3,q)_{W2} via A -> D^{-1}... specifically A -> C A C^{-1} with C = D^{-1}.
pub fn congruence_between(gf: &Gf, w1: &Mat, w2: &Mat) -> Mat {
    let c1 = congruence_to_identity(gf, w1);
    let c2 = congruence_to_identity(gf, w2);
    let c2_inv = inverse(gf, &c2).expect("congruence transform is invertible");
    mul(gf, &c2_inv, &c1)
}

/// Conjugation A -> D A D^{-1}. If A preserves W and W' = D W conj(D)^T,
/// the image preserves W', so this carries SU(3,q)_W onto SU(3,q)_{W'}.
pub fn transport(gf: &Gf, d: &Mat, a: &Mat) -> Mat {
    let d_inv = inverse(gf, d).expect("transport conjugator is invertible");
    mul(gf, &mul(gf, d, a), &d_inv)
}

/// The all-ones antidiagonal Gram matrix.
pub fn antidiag(gf: &Gf) -> Mat {
    let mut w = mat_zero();
    w[2] = gf.one();
    w[4] = gf.one();
    w[6] = gf.one();
    w
}

/// Number of 1-dimensional totally isotropic subspaces of the Hermitian
/// form: projective points [v] with h(v,v) = 0. Independent route to the
/// isotropic point count q^3 + 1.
pub fn count_isotropic_points(gf: &Gf, w: &Mat) -> u64 {
    let mut isotropic_vectors = 0u64;
    for v in all_vectors(gf) {
        if v != [0, 0, 0] && form_value(gf, w, &v, &v) == 0 {
            isotropic_vectors += 1;
        }
    }
    // every projective point accounts for q^2 - 1 nonzero vectors
    isotropic_vectors / (gf.size() as u64 - 1)
}
