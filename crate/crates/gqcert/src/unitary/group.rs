//! Brute-force finite groups: BFS enumeration, conjugacy classes,
//! centralizers.
//!
//! `PsuGroup` holds PSU(3,q) as canonicalized projective matrices packed
//! into u64 keys (9 entries x 6 bits). Generating sets are discovered by a
//! seeded random search over structured unitary matrices and certified by
//! the closure size matching the group-order formula; centralizers are
//! computed by full scans, which stay affordable at desk scale.

use super::field::{Fe, Gf};
use super::matrix::{self, Mat};
use crate::catalog::group_order;
use crate::primes::PrimePower;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("q = {0} is beyond the desk-scale enumeration cap")]
    BeyondDeskScale(u64),
    #[error("no generating set found after {0} seeded attempts")]
    GeneratingSetNotFound(u32),
    #[error(transparent)]
    Field(#[from] super::field::FieldError),
}

/// A fully enumerated finite group with a designated element encoding.
pub trait Group {
    type Elem: Clone + Eq + Ord + std::hash::Hash;

    fn elements(&self) -> &[Self::Elem];
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn identity(&self) -> Self::Elem;
    /// A set whose closure is the whole group; used to drive orbit searches.
    fn generators(&self) -> Vec<Self::Elem>;

    fn order(&self) -> usize {
        self.elements().len()
    }
}

pub fn element_order<G: Group>(g: &G, a: &G::Elem) -> u64 {
    let e = g.identity();
    let mut x = a.clone();
    let mut n = 1u64;
    while x != e {
        x = g.op(&x, a);
        n += 1;
    }
    n
}

pub fn elements_of_order<G: Group>(g: &G, n: u64) -> Vec<G::Elem> {
    let divisors: Vec<u64> = (1..n).filter(|d| n % d == 0).collect();
    let e = g.identity();
    g.elements()
        .iter()
        .filter(|a| {
            let mut pows = HashMap::new();
            let mut x = (*a).clone();
            let mut k = 1;
            pows.insert(1u64, x.clone());
            while k < n {
                x = g.op(&x, a);
                k += 1;
                pows.insert(k, x.clone());
            }
            pows[&n] == e && divisors.iter().all(|d| pows[d] != e)
        })
        .cloned()
        .collect()
}

/// Conjugation orbit of `a` under the whole group, found by closing under
/// conjugation by the generators.
pub fn conjugacy_class<G: Group>(g: &G, a: &G::Elem) -> Vec<G::Elem> {
    let gens = g.generators();
    let mut seen: HashSet<G::Elem> = HashSet::new();
    let mut queue = vec![a.clone()];
    seen.insert(a.clone());
    while let Some(x) = queue.pop() {
        for c in &gens {
            let y = g.op(&g.op(&g.inverse(c), &x), c);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    let mut out: Vec<G::Elem> = seen.into_iter().collect();
    out.sort();
    out
}

#[derive(Clone, Debug)]
pub struct ClassInfo<E> {
    pub rep: E,
    pub size: usize,
    /// |G| / |class|, by orbit-stabilizer.
    pub centralizer_order: usize,
}

/// Partition of the order-n elements into conjugacy classes, deterministic
/// (classes sorted by their least representative).
pub fn classes_of_order<G: Group>(g: &G, n: u64) -> Vec<ClassInfo<G::Elem>> {
    let mut remaining: std::collections::BTreeSet<G::Elem> =
        elements_of_order(g, n).into_iter().collect();
    let mut out = Vec::new();
    while let Some(rep) = remaining.iter().next().cloned() {
        let class = conjugacy_class(g, &rep);
        assert_eq!(g.order() % class.len(), 0, "class size divides the group order");
        for x in &class {
            assert!(remaining.remove(x), "class member should have order n");
        }
        out.push(ClassInfo {
            rep,
            size: class.len(),
            centralizer_order: g.order() / class.len(),
        });
    }
    out
}

/// Full-scan centralizer of `a`, sorted.
pub fn centralizer<G: Group>(g: &G, a: &G::Elem) -> Vec<G::Elem> {
    let mut out: Vec<G::Elem> = g
        .elements()
        .iter()
        .filter(|x| g.op(x, a) == g.op(a, x))
        .cloned()
        .collect();
    out.sort();
    out
}

pub fn is_abelian_subset<G: Group>(g: &G, set: &[G::Elem]) -> bool {
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            if g.op(a, b) != g.op(b, a) {
                return false;
            }
        }
    }
    true
}

/// Least common multiple of the element orders within a subset.
pub fn exponent_of_subset<G: Group>(g: &G, set: &[G::Elem]) -> u64 {
    set.iter().fold(1u64, |acc, a| {
        let o = element_order(g, a);
        acc / gcd_u64(acc, o) * o
    })
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Subgroup generated by `gens` inside an ambient group, sorted.
pub fn closure<G: Group>(g: &G, gens: &[G::Elem]) -> Vec<G::Elem> {
    let mut seen: HashSet<G::Elem> = HashSet::new();
    let mut queue = vec![g.identity()];
    seen.insert(g.identity());
    while let Some(x) = queue.pop() {
        for c in gens {
            let y = g.op(&x, c);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    let mut out: Vec<G::Elem> = seen.into_iter().collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// PSU(3,q)

const PACK_BITS: u32 = 6;

pub fn pack(m: &Mat) -> u64 {
    let mut key = 0u64;
    for (i, &e) in m.iter().enumerate() {
        debug_assert!(e < 64);
        key |= (e as u64) << (PACK_BITS * i as u32);
    }
    key
}

pub fn unpack(key: u64) -> Mat {
    let mut m = [0u8; 9];
    for (i, e) in m.iter_mut().enumerate() {
        *e = ((key >> (PACK_BITS * i as u32)) & 0x3f) as u8;
    }
    m
}

pub struct PsuGroup {
    q: PrimePower,
    gf: Gf,
    gram: Mat,
    center: Vec<Fe>,
    elems: Vec<u64>,
    set: HashSet<u64>,
    gens: Vec<u64>,
}

impl PsuGroup {
    /// Enumerates PSU(3,q) for the antidiagonal Gram matrix.
    pub fn build(q: PrimePower, seed: u64) -> Result<PsuGroup, GroupError> {
        let gf = Gf::new(q)?;
        let w = matrix::antidiag(&gf);
        Self::build_with_gram(q, gf, w, seed)
    }

    /// Enumerates PSU(3,q) for an arbitrary nonsingular Hermitian W.
    pub fn build_with_gram(
        q: PrimePower,
        gf: Gf,
        gram: Mat,
        seed: u64,
    ) -> Result<PsuGroup, GroupError> {
        if !matches!(q.q(), 2 | 3 | 4 | 5 | 7 | 8) {
            return Err(GroupError::BeyondDeskScale(q.q()));
        }
        assert!(
            matrix::is_hermitian(&gf, &gram) && matrix::det(&gf, &gram) != 0,
            "Gram matrix must be nonsingular Hermitian"
        );
        let expected = group_order(&q)
            .to_u64()
            .expect("desk-scale group order fits u64") as usize;

        // Scalars lambda I in SU(3,q): lambda^3 = 1 and lambda of norm 1.
        let center: Vec<Fe> = gf
            .elements()
            .filter(|&l| l != 0 && gf.pow(l, 3) == 1 && gf.norm(l) == 1)
            .collect();

        // The search pool lives in the antidiagonal model, where both full
        // unipotent radicals are visible as triangular matrices.
        let w0 = matrix::antidiag(&gf);
        let mut pool = triangular_members(&gf, &w0);
        pool.extend(torus_members(&gf, &w0));
        if gram != w0 {
            let d = matrix::congruence_between(&gf, &w0, &gram);
            pool = pool
                .into_iter()
                .map(|a| {
                    let b = matrix::transport(&gf, &d, &a);
                    debug_assert!(matrix::is_special_unitary(&gf, &b, &gram));
                    b
                })
                .collect();
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (q.q() << 32) ^ pack(&gram));
        const ATTEMPTS: u32 = 64;
        for attempt in 0..ATTEMPTS {
            let k = 2 + (attempt / 8) as usize;
            let gens: Vec<Mat> = pool.choose_multiple(&mut rng, k).cloned().collect();
            if let Some((elems, set)) = try_closure(&gf, &gram, &center, &gens, expected) {
                let gen_keys = gens.iter().map(|m| canon_with(&gf, &center, m)).collect();
                return Ok(PsuGroup { q, gf, gram, center, elems, set, gens: gen_keys });
            }
        }
        Err(GroupError::GeneratingSetNotFound(ATTEMPTS))
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn gf(&self) -> &Gf {
        &self.gf
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn center_scalars(&self) -> &[Fe] {
        &self.center
    }

    /// Canonical packed key: the least key among the center multiples.
    pub fn canon(&self, m: &Mat) -> u64 {
        self.center
            .iter()
            .map(|&l| pack(&matrix::scalar_mul(&self.gf, l, m)))
            .min()
            .expect("center contains 1")
    }

    pub fn contains_mat(&self, m: &Mat) -> bool {
        self.set.contains(&self.canon(m))
    }

    pub fn contains(&self, key: u64) -> bool {
        self.set.contains(&key)
    }

    pub fn is_member_matrix(&self, m: &Mat) -> bool {
        matrix::is_special_unitary(&self.gf, m, &self.gram)
    }
}

fn canon_with(gf: &Gf, center: &[Fe], m: &Mat) -> u64 {
    center
        .iter()
        .map(|&l| pack(&matrix::scalar_mul(gf, l, m)))
        .min()
        .expect("center contains 1")
}

fn try_closure(
    gf: &Gf,
    gram: &Mat,
    center: &[Fe],
    gens: &[Mat],
    expected: usize,
) -> Option<(Vec<u64>, HashSet<u64>)> {
    debug_assert!(gens.iter().all(|g| matrix::is_special_unitary(gf, g, gram)));
    let mut set = HashSet::with_capacity(expected * 2);
    let id = matrix::identity(gf);
    set.insert(canon_with(gf, center, &id));
    let mut queue: Vec<Mat> = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = matrix::mul(gf, &x, g);
            if set.insert(canon_with(gf, center, &y)) {
                queue.push(y);
            }
        }
        if set.len() > expected {
            return None; // cannot happen for true subgroups; defensive cap
        }
    }
    if set.len() != expected {
        return None;
    }
    let mut elems: Vec<u64> = set.iter().copied().collect();
    elems.sort_unstable();
    Some((elems, set))
}

/// All upper and lower unitriangular members of SU(3,q)_W.
fn triangular_members(gf: &Gf, w: &Mat) -> Vec<Mat> {
    let n = gf.size() as u8;
    let mut out = Vec::new();
    let id = matrix::identity(gf);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let upper: Mat = [1, a, b, 0, 1, c, 0, 0, 1];
                if upper != id && matrix::is_special_unitary(gf, &upper, w) {
                    out.push(upper);
                }
                let lower: Mat = [1, 0, 0, a, 1, 0, b, c, 1];
                if lower != id && matrix::is_special_unitary(gf, &lower, w) {
                    out.push(lower);
                }
            }
        }
    }
    out
}

/// Diagonal members of SU(3,q)_W.
fn torus_members(gf: &Gf, w: &Mat) -> Vec<Mat> {
    let n = gf.size() as u8;
    let mut out = Vec::new();
    let id = matrix::identity(gf);
    for a in 1..n {
        for b in 1..n {
            for c in 1..n {
                let m: Mat = [a, 0, 0, 0, b, 0, 0, 0, c];
                if m != id && matrix::is_special_unitary(gf, &m, w) {
                    out.push(m);
                }
            }
        }
    }
    out
}

impl Group for PsuGroup {
    type Elem = u64;

    fn elements(&self) -> &[u64] {
        &self.elems
    }

    fn op(&self, a: &u64, b: &u64) -> u64 {
        self.canon(&matrix::mul(&self.gf, &unpack(*a), &unpack(*b)))
    }

    fn inverse(&self, a: &u64) -> u64 {
        let inv = matrix::inverse(&self.gf, &unpack(*a)).expect("group elements are invertible");
        self.canon(&inv)
    }

    fn identity(&self) -> u64 {
        self.canon(&matrix::identity(&self.gf))
    }

    fn generators(&self) -> Vec<u64> {
        self.gens.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(q: u64) -> PsuGroup {
        PsuGroup::build(PrimePower::from_value(q).unwrap(), 17).unwrap()
    }

    #[test]
    fn psu3_2_and_3_sizes() {
        assert_eq!(build(2).order(), 72);
        assert_eq!(build(3).order(), 6048);
    }

    #[test]
    fn canonicalization_idempotent_and_product_compatible() {
        let g = build(3);
        let mut count = 0;
        for &key in g.elements().iter().step_by(97) {
            let m = unpack(key);
            assert_eq!(g.canon(&unpack(g.canon(&m))), g.canon(&m));
            count += 1;
        }
        assert!(count > 10);
        // canonical(g)*canonical(h) canonicalizes to canonical(gh)
        let a = unpack(g.elements()[5]);
        let b = unpack(g.elements()[1000]);
        let prod = matrix::mul(g.gf(), &a, &b);
        assert_eq!(g.canon(&prod), g.op(&g.elements()[5], &g.elements()[1000]));
    }

    #[test]
    fn identity_and_inverse() {
        let g = build(2);
        let e = g.identity();
        for &x in g.elements().iter() {
            assert_eq!(g.op(&x, &g.inverse(&x)), e);
        }
    }

    #[test]
    fn order3_elements_at_q2() {
        let g = build(2);
        // PSU(3,2) = C3^2 : Q8 has exactly eight order-3 elements in one class.
        let classes = classes_of_order(&g, 3);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size, 8);
        assert_eq!(classes[0].centralizer_order, 9);
        let cent = centralizer(&g, &classes[0].rep);
        assert_eq!(cent.len(), 9);
        assert!(is_abelian_subset(&g, &cent));
        assert_eq!(exponent_of_subset(&g, &cent), 3);
    }
}
