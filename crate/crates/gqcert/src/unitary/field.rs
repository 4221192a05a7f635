//! The field F_{q^2} with its conjugation a -> a^q, table-driven.
//!
//! Elements are indices 0..q^2-1 encoding coefficient vectors over F_p in
//! base p (lowest degree first) against the lexicographically smallest
//! irreducible modulus of degree 2f. Fields here are tiny (q <= 8, so at
//! most 64 elements) and all operations are table lookups.

use crate::primes::PrimePower;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("no irreducible modulus found for degree {0} over F_{1} (internal)")]
    NoModulus(usize, u64),
    #[error("field of order {0}^2 exceeds the table-driven representation")]
    TooLarge(u64),
    #[error("field verification failed: {0}")]
    BadField(String),
}

pub type Fe = u8;

#[derive(Clone)]
pub struct Gf {
    p: u64,
    q: u64,
    size: usize,
    ext: usize,
    modulus: Vec<u64>,
    add_t: Vec<Fe>,
    mul_t: Vec<Fe>,
    neg_t: Vec<Fe>,
    inv_t: Vec<Fe>,
    conj_t: Vec<Fe>,
    omega: Fe,
}

fn idx_to_vec(mut i: u64, p: u64, ext: usize) -> Vec<u64> {
    let mut v = vec![0; ext];
    for c in v.iter_mut() {
        *c = i % p;
        i /= p;
    }
    v
}

fn vec_to_idx(v: &[u64], p: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of a coefficient vector modulo the monic `modulus`, over F_p.
fn poly_rem(mut a: Vec<u64>, modulus: &[u64], p: u64) -> Vec<u64> {
    let deg_m = modulus.len() - 1;
    while a.len() > deg_m {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - deg_m;
        if lead != 0 {
            for (i, &mc) in modulus.iter().enumerate() {
                let pos = shift + i;
                a[pos] = (a[pos] + p - (lead * mc) % p) % p;
            }
        }
        a.pop();
    }
    a.resize(deg_m, 0);
    a
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Monic irreducible of degree `ext` over F_p with the smallest base-p
/// encoding, found by trial division.
fn smallest_irreducible(p: u64, ext: usize) -> Option<Vec<u64>> {
    let count = p.pow(ext as u32);
    'cand: for low in 0..count {
        let mut cand = idx_to_vec(low, p, ext);
        cand.push(1);
        // divisibility by any monic divisor of degree 1..=ext/2
        for d in 1..=ext / 2 {
            for dl in 0..p.pow(d as u32) {
                let mut div = idx_to_vec(dl, p, d);
                div.push(1);
                let rem = poly_rem(cand.clone(), &div, p);
                if rem.iter().all(|&c| c == 0) {
                    continue 'cand;
                }
            }
        }
        return Some(cand);
    }
    None
}

impl Gf {
    /// Builds F_{q^2} for q = p^f; fails if the order exceeds the u8 tables.
    pub fn new(q: PrimePower) -> Result<Gf, FieldError> {
        let p = q.p();
        let ext = 2 * q.f() as usize;
        let size64 = q.q() * q.q();
        if size64 > 256 {
            return Err(FieldError::TooLarge(q.q()));
        }
        let size = size64 as usize;
        let modulus = smallest_irreducible(p, ext).ok_or(FieldError::NoModulus(ext, p))?;

        let mut add_t = vec![0u8; size * size];
        let mut mul_t = vec![0u8; size * size];
        let mut neg_t = vec![0u8; size];
        for a in 0..size {
            let va = idx_to_vec(a as u64, p, ext);
            let vneg: Vec<u64> = va.iter().map(|&c| (p - c) % p).collect();
            neg_t[a] = vec_to_idx(&vneg, p) as u8;
            for b in 0..size {
                let vb = idx_to_vec(b as u64, p, ext);
                let vsum: Vec<u64> = va.iter().zip(&vb).map(|(&x, &y)| (x + y) % p).collect();
                add_t[a * size + b] = vec_to_idx(&vsum, p) as u8;
                let prod = poly_rem(poly_mul(&va, &vb, p), &modulus, p);
                mul_t[a * size + b] = vec_to_idx(&prod, p) as u8;
            }
        }

        let mut gf = Gf {
            p,
            q: q.q(),
            size,
            ext,
            modulus,
            add_t,
            mul_t,
            neg_t,
            inv_t: vec![0; size],
            conj_t: vec![0; size],
            omega: 0,
        };

        for a in 1..size as u8 {
            let mut found = false;
            for b in 1..size as u8 {
                if gf.mul(a, b) == 1 {
                    gf.inv_t[a as usize] = b;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(FieldError::BadField(format!(
                    "element {} has no inverse; modulus reducible",
                    a
                )));
            }
        }
        for a in 0..size as u8 {
            gf.conj_t[a as usize] = gf.pow(a, gf.q);
        }

        // Designated generator: the least element of full multiplicative order.
        let full = (size - 1) as u64;
        gf.omega = (1..size as u8)
            .find(|&a| gf.order(a) == full)
            .ok_or_else(|| FieldError::BadField("no multiplicative generator".into()))?;

        // Conjugation must be an involutory automorphism fixing exactly F_q.
        let fixed = (0..size as u8).filter(|&a| gf.conj(a) == a).count() as u64;
        if fixed != q.q() {
            return Err(FieldError::BadField(format!(
                "conjugation fixes {} elements, expected {}",
                fixed,
                q.q()
            )));
        }
        for a in 0..size as u8 {
            if gf.conj(gf.conj(a)) != a {
                return Err(FieldError::BadField("conjugation is not involutory".into()));
            }
        }
        Ok(gf)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of field elements, q^2.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Fe {
        0
    }

    pub fn one(&self) -> Fe {
        1
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.add_t[a as usize * self.size + b as usize]
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.mul_t[a as usize * self.size + b as usize]
    }

    pub fn neg(&self, a: Fe) -> Fe {
        self.neg_t[a as usize]
    }

    pub fn inv(&self, a: Fe) -> Fe {
        assert!(a != 0, "inverse of zero");
        self.inv_t[a as usize]
    }

    /// a^q, the conjugation automorphism.
    pub fn conj(&self, a: Fe) -> Fe {
        self.conj_t[a as usize]
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut r = 1u8;
        let mut base = a;
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        e %= (self.size - 1) as u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    /// Multiplicative order; a must be nonzero.
    pub fn order(&self, a: Fe) -> u64 {
        assert!(a != 0);
        let mut x = a;
        let mut n = 1u64;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// The designated generator of F_{q^2}^*.
    pub fn omega(&self) -> Fe {
        self.omega
    }

    /// rho = omega^(q-1), of multiplicative order q+1.
    pub fn rho(&self) -> Fe {
        self.pow(self.omega, self.q - 1)
    }

    /// The least element of multiplicative order exactly n, if n | q^2 - 1.
    pub fn zeta(&self, n: u64) -> Option<Fe> {
        if n == 0 || (self.size as u64 - 1) % n != 0 {
            return None;
        }
        (1..self.size as u8).find(|&a| self.order(a) == n)
    }

    /// Embeds 0..p-1 as the prime subfield.
    pub fn from_base(&self, c: u64) -> Fe {
        (c % self.p) as Fe
    }

    /// Is a in the subfield F_q (fixed by conjugation)?
    pub fn in_fq(&self, a: Fe) -> bool {
        self.conj(a) == a
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.size as Fe
    }

    /// a * conj(a) = a^(q+1), the norm to F_q.
    pub fn norm(&self, a: Fe) -> Fe {
        self.mul(a, self.conj(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Gf {
        Gf::new(PrimePower::from_value(q).unwrap()).unwrap()
    }

    #[test]
    fn builds_all_desk_scale_fields() {
        for q in [2u64, 3, 4, 5, 7, 8] {
            let f = gf(q);
            assert_eq!(f.size() as u64, q * q);
        }
    }

    #[test]
    fn omega_order_q3() {
        // q = 3: F_9, omega of order 8
        let f = gf(3);
        assert_eq!(f.order(f.omega()), 8);
    }

    #[test]
    fn all_nonzero_elements_have_full_exponent_q4() {
        // q = 4: F_16 over F_2 (f = 2), x^15 = 1 for every nonzero x
        let f = gf(4);
        for a in 1..16u8 {
            assert_eq!(f.pow(a, 15), 1);
        }
    }

    #[test]
    fn rho_order_is_q_plus_1() {
        // q = 5: rho = omega^4 has order 6
        let f = gf(5);
        assert_eq!(f.rho(), f.pow(f.omega(), 4));
        assert_eq!(f.order(f.rho()), 6);
        for q in [2u64, 3, 4, 7, 8] {
            let f = gf(q);
            assert_eq!(f.order(f.rho()), q + 1);
        }
    }

    #[test]
    fn field_axioms_smoke() {
        for q in [3u64, 4, 5] {
            let f = gf(q);
            let n = f.size() as u8;
            for a in 0..n {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                    assert_eq!(f.pow(a, q * q - 1), 1);
                }
                for b in 0..n {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, b), f.add(b, a));
                    // conjugation is a ring homomorphism
                    assert_eq!(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)));
                    assert_eq!(f.conj(f.add(a, b)), f.add(f.conj(a), f.conj(b)));
                }
            }
        }
    }

    #[test]
    fn norm_lands_in_fq_and_is_onto() {
        for q in [3u64, 4, 5, 7, 8] {
            let f = gf(q);
            let mut image = std::collections::HashSet::new();
            for a in f.elements() {
                assert!(f.in_fq(f.norm(a)));
                if a != 0 {
                    image.insert(f.norm(a));
                }
            }
            // norm is onto F_q^*
            assert_eq!(image.len() as u64, q - 1);
        }
    }

    #[test]
    fn zeta_examples() {
        let f = gf(5);
        let z3 = f.zeta(3).unwrap();
        assert_eq!(f.order(z3), 3);
        assert_eq!(f.zeta(7), None);
        let f = gf(7);
        assert_eq!(f.order(f.zeta(4).unwrap()), 4);
    }
}
