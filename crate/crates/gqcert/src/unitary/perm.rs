//! Small permutation-group models built by exhaustive enumeration.
//!
//! PSL(2,7) acts on the 8 points of the projective line over F_7, A6 on 6
//! letters, ASL(2,3) on the 9 vectors of F_3^2. All three are small enough
//! that conjugacy searches can treat every element as a generator.

use super::group::Group;

pub type Perm = Vec<u8>;

pub struct PermGroup {
    pub name: &'static str,
    degree: usize,
    elems: Vec<Perm>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    fn from_elements(name: &'static str, degree: usize, mut elems: Vec<Perm>) -> PermGroup {
        elems.sort();
        elems.dedup();
        PermGroup { name, degree, elems }
    }

    /// A6: the even permutations of 6 letters.
    pub fn a6() -> PermGroup {
        let mut elems = Vec::with_capacity(360);
        let mut perm: Perm = (0..6).collect();
        permute_all(&mut perm, 0, &mut |p| {
            if is_even(p) {
                elems.push(p.to_vec());
            }
        });
        let g = PermGroup::from_elements("A6", 6, elems);
        assert_eq!(g.order(), 360);
        g
    }

    /// PSL(2,7) on the projective line PG(1,7): points 0..6 are [x:1],
    /// point 7 is [1:0]. Enumerated from SL(2,7) acting by Moebius maps.
    pub fn psl27() -> PermGroup {
        let p = 7i64;
        let point = |x: i64, z: i64| -> u8 {
            if z.rem_euclid(p) == 0 {
                7
            } else {
                let zinv = mod_inv(z.rem_euclid(p), p);
                ((x * zinv).rem_euclid(p)) as u8
            }
        };
        let mut elems = Vec::new();
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d - b * c).rem_euclid(p) != 1 {
                            continue;
                        }
                        let mut perm = vec![0u8; 8];
                        for pt in 0..8u8 {
                            let (x, z) = if pt == 7 { (1, 0) } else { (pt as i64, 1) };
                            perm[pt as usize] = point(a * x + b * z, c * x + d * z);
                        }
                        elems.push(perm);
                    }
                }
            }
        }
        // SL(2,7) has 336 elements; A and -A act identically.
        let g = PermGroup::from_elements("PSL(2,7)", 8, elems);
        assert_eq!(g.order(), 168);
        g
    }

    /// ASL(2,3) = F_3^2 : SL(2,3) on the 9 points of F_3^2
    /// (point i encodes the vector (i % 3, i / 3)).
    pub fn asl23() -> PermGroup {
        let p = 3i64;
        let mut elems = Vec::new();
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d - b * c).rem_euclid(p) != 1 {
                            continue;
                        }
                        for tx in 0..p {
                            for ty in 0..p {
                                let mut perm = vec![0u8; 9];
                                for pt in 0..9i64 {
                                    let (x, y) = (pt % 3, pt / 3);
                                    let nx = (a * x + b * y + tx).rem_euclid(p);
                                    let ny = (c * x + d * y + ty).rem_euclid(p);
                                    perm[pt as usize] = (nx + 3 * ny) as u8;
                                }
                                elems.push(perm);
                            }
                        }
                    }
                }
            }
        }
        let g = PermGroup::from_elements("ASL(2,3)", 9, elems);
        assert_eq!(g.order(), 216);
        g
    }
}

fn mod_inv(a: i64, p: i64) -> i64 {
    // p prime, a nonzero mod p
    let mut result = 1i64;
    let mut base = a.rem_euclid(p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn is_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut parity = 0;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j] as usize;
            len += 1;
        }
        parity ^= (len - 1) & 1;
    }
    parity == 0
}

fn permute_all(perm: &mut Perm, k: usize, f: &mut impl FnMut(&Perm)) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

impl Group for PermGroup {
    type Elem = Perm;

    fn elements(&self) -> &[Perm] {
        &self.elems
    }

    fn op(&self, a: &Perm, b: &Perm) -> Perm {
        // (a then b): x -> b[a[x]]
        a.iter().map(|&x| b[x as usize]).collect()
    }

    fn inverse(&self, a: &Perm) -> Perm {
        let mut out = vec![0u8; a.len()];
        for (i, &x) in a.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        out
    }

    fn identity(&self) -> Perm {
        (0..self.degree as u8).collect()
    }

    fn generators(&self) -> Vec<Perm> {
        // small enough that conjugating by everything is fine
        self.elems.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unitary::group::{centralizer, classes_of_order, element_order};

    #[test]
    fn psl27_unique_order4_class_with_c4_centralizer() {
        let g = PermGroup::psl27();
        let classes = classes_of_order(&g, 4);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size, 42);
        assert_eq!(classes[0].centralizer_order, 4);
        let cent = centralizer(&g, &classes[0].rep);
        assert_eq!(cent.len(), 4);
        // cyclic: some element of the centralizer has order 4
        assert!(cent.iter().any(|x| element_order(&g, x) == 4));
    }

    #[test]
    fn a6_class_structure() {
        let g = PermGroup::a6();
        let order4 = classes_of_order(&g, 4);
        assert_eq!(order4.len(), 1);
        assert_eq!(order4[0].centralizer_order, 4);
        // sanity probe: two classes of order-3 elements in A6
        assert_eq!(classes_of_order(&g, 3).len(), 2);
    }

    #[test]
    fn asl23_unique_order4_class_with_c4_centralizer() {
        let g = PermGroup::asl23();
        let classes = classes_of_order(&g, 4);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size, 54);
        assert_eq!(classes[0].centralizer_order, 4);
        let cent = centralizer(&g, &classes[0].rep);
        assert!(cent.iter().any(|x| element_order(&g, x) == 4));
    }
}
