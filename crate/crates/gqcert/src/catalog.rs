//! The maximal subgroup catalog for T = PSU(3,q) and its index formulas.
//!
//! Each row carries the structure of M ∩ T, the applicability condition on
//! q, and the exact index [T : M ∩ T]. Rows are declarative data consumed by
//! the eliminators; for novelty rows the index is additionally recomputed
//! from the subgroup order as |T| / |M ∩ T| as a cross-check.

use crate::gq::{check_count_bounds, PointLineCounts};
use crate::int::Int;
use crate::primes::PrimePower;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SubgroupTag {
    A,
    B,
    C,
    CPrime,
    D,
    DPrime,
    E,
    F,
    G,
    GPrime,
    H,
    HPrime,
    I,
    J,
    K,
}

use SubgroupTag::*;

pub const ALL_TAGS: [SubgroupTag; 15] =
    [A, B, C, CPrime, D, DPrime, E, F, G, GPrime, H, HPrime, I, J, K];

impl SubgroupTag {
    pub fn label(self) -> &'static str {
        match self {
            A => "a",
            B => "b",
            C => "c",
            CPrime => "c'",
            D => "d",
            DPrime => "d'",
            E => "e",
            F => "f",
            G => "g",
            GPrime => "g'",
            H => "h",
            HPrime => "h'",
            I => "i",
            J => "j",
            K => "k",
        }
    }

    /// The four novelty rows, arising only at q = 5.
    pub fn is_novelty(self) -> bool {
        matches!(self, CPrime | DPrime | GPrime | HPrime)
    }

    pub fn structure(self) -> &'static str {
        match self {
            A => "^[q]^(1+2):(q^2-1)",
            B => "^GU(2,q)",
            C | CPrime => "^(q^2-q+1):3",
            D | DPrime => "^(q+1)^2:S3",
            E => "SO(3,q)",
            F => "PSU(3,q0).gcd(3,(q+1)/(q0+1))",
            G | GPrime => "^3^(1+2):Q8.(gcd(9,q+1)/3)",
            H | HPrime => "PSL(2,7)",
            I => "A6",
            J => "A6.2",
            K => "A7",
        }
    }

    pub fn notes(self) -> &'static str {
        match self {
            A | B => "",
            C => "q != 3, 5",
            CPrime | DPrime | GPrime | HPrime => "novelty, q = 5",
            D => "q != 5",
            E => "q >= 7, q odd",
            F => "q = q0^r, r odd prime",
            G => "p = q = 2 mod 3, q >= 11",
            H => "q != 5, p = q = 3,5,6 mod 7",
            I => "p = q = 11,14 mod 15",
            J | K => "q = 5",
        }
    }

    pub fn applies(self, q: &PrimePower) -> bool {
        let qv = q.q();
        match self {
            A | B => true,
            C => qv != 3 && qv != 5,
            D => qv != 5,
            E => qv >= 7 && q.is_odd(),
            F => !q.subfield_power_decompositions().is_empty(),
            G => q.f() == 1 && qv % 3 == 2 && qv >= 11,
            H => qv != 5 && q.f() == 1 && matches!(qv % 7, 3 | 5 | 6),
            I => q.f() == 1 && matches!(qv % 15, 11 | 14),
            CPrime | DPrime | GPrime | HPrime | J | K => qv == 5,
        }
    }
}

pub fn gcd3(n: u64) -> u64 {
    if n % 3 == 0 {
        3
    } else {
        1
    }
}

pub fn gcd9(n: u64) -> u64 {
    if n % 9 == 0 {
        9
    } else {
        gcd3(n)
    }
}

/// |T| = q^3 (q^2-1)(q^3+1) / gcd(3, q+1).
pub fn group_order(q: &PrimePower) -> Int {
    let qi = q.int();
    let raw = qi.pow(3) * (qi.pow(2) - Int::ONE) * (qi.pow(3) + Int::ONE);
    raw.div_exact(&Int::from(gcd3(q.q() + 1)))
}

/// One applicable row instance: type (f) carries its (q0, r) decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupCase {
    pub tag: SubgroupTag,
    pub q: PrimePower,
    pub q0: Option<PrimePower>,
    pub r: Option<u64>,
    pub index: Int,
}

impl SubgroupCase {
    pub fn describe(&self) -> String {
        match self.q0 {
            Some(q0) => format!("({}) q={} q0={} r={}", self.tag.label(), self.q, q0, self.r.unwrap()),
            None => format!("({}) q={}", self.tag.label(), self.q),
        }
    }
}

/// gcd(3, (q+1)/(q0+1)) for the type (f) row.
pub fn f_row_c(q: &PrimePower, q0: &PrimePower) -> u64 {
    gcd3((q.q() + 1) / (q0.q() + 1))
}

/// [T : M ∩ T] per the catalog's last column.
pub fn index_of(tag: SubgroupTag, q: &PrimePower, q0r: Option<(PrimePower, u64)>) -> Int {
    let qi = q.int();
    let d = Int::from(gcd3(q.q() + 1));
    let big = qi.pow(3) * (qi.pow(2) - Int::ONE) * (qi.pow(3) + Int::ONE);
    match tag {
        A => qi.pow(3) + Int::ONE,
        B => qi.pow(2) * (qi.pow(2) - &qi + Int::ONE),
        C | CPrime => (qi.pow(3) * (qi.pow(2) - Int::ONE) * (&qi + &Int::ONE)).div_exact(&Int::from(3u32)),
        D | DPrime => (qi.pow(3) * (&qi - &Int::ONE) * (qi.pow(2) - &qi + Int::ONE))
            .div_exact(&Int::from(6u32)),
        E => (qi.pow(2) * (qi.pow(3) + Int::ONE)).div_exact(&d),
        F => {
            let (q0, _r) = q0r.expect("type (f) needs a (q0, r) decomposition");
            let c = Int::from(f_row_c(q, &q0));
            let q0i = q0.int();
            let denom = c * q0i.pow(3) * (q0i.pow(2) - Int::ONE) * (q0i.pow(3) + Int::ONE);
            big.div_exact(&denom)
        }
        G | GPrime => big.div_exact(&Int::from(72 * gcd9(q.q() + 1))),
        H | HPrime => big.div_exact(&(Int::from(168u32) * &d)),
        I => big.div_exact(&(Int::from(360u32) * &d)),
        J => group_order(q).div_exact(&Int::from(720u32)),
        K => group_order(q).div_exact(&Int::from(2520u32)),
    }
}

/// |M ∩ T| recomputed from the structure column, hat meaning division by
/// gcd(3, q+1). Used to cross-check the index formulas.
pub fn structure_order(tag: SubgroupTag, q: &PrimePower, q0r: Option<(PrimePower, u64)>) -> Int {
    let qi = q.int();
    let d = Int::from(gcd3(q.q() + 1));
    match tag {
        A => (qi.pow(3) * (qi.pow(2) - Int::ONE)).div_exact(&d),
        // |GU(2,q)| = q (q+1) (q^2-1)
        B => (&qi * (&qi + &Int::ONE) * (qi.pow(2) - Int::ONE)).div_exact(&d),
        C | CPrime => (Int::from(3u32) * (qi.pow(2) - &qi + Int::ONE)).div_exact(&d),
        D | DPrime => (Int::from(6u32) * (&qi + &Int::ONE).pow(2)).div_exact(&d),
        // SO(3,q) for odd q has order q(q^2-1); no hat quotient applies.
        E => &qi * (qi.pow(2) - Int::ONE),
        F => {
            let (q0, _) = q0r.expect("type (f) needs a (q0, r) decomposition");
            let c = Int::from(f_row_c(q, &q0));
            let q0i = q0.int();
            let psu_q0 = (q0i.pow(3) * (q0i.pow(2) - Int::ONE) * (q0i.pow(3) + Int::ONE))
                .div_exact(&Int::from(gcd3(q0.q() + 1)));
            c * psu_q0
        }
        G | GPrime => Int::from(72 * gcd9(q.q() + 1)).div_exact(&d),
        H | HPrime => Int::from(168u32),
        I => Int::from(360u32),
        J => Int::from(720u32),
        K => Int::from(2520u32),
    }
}

/// All rows applicable at q, with type (f) expanded over its (q0, r) instances.
pub fn applicable_cases(q: &PrimePower) -> Vec<SubgroupCase> {
    let mut out = Vec::new();
    for tag in ALL_TAGS {
        if !tag.applies(q) {
            continue;
        }
        if tag == F {
            for (q0, r) in q.subfield_power_decompositions() {
                out.push(SubgroupCase {
                    tag,
                    q: *q,
                    q0: Some(q0),
                    r: Some(r),
                    index: index_of(tag, q, Some((q0, r))),
                });
            }
        } else {
            out.push(SubgroupCase { tag, q: *q, q0: None, r: None, index: index_of(tag, q, None) });
        }
    }
    out
}

pub fn applicable_types(q: &PrimePower) -> Vec<SubgroupTag> {
    ALL_TAGS.iter().copied().filter(|t| t.applies(q)).collect()
}

/// All ordered pairs of applicable cases, as (point case, line case) with
/// (v, b) their indices, filtered by the count bounds.
pub fn candidate_counts(q: &PrimePower) -> Vec<(SubgroupCase, SubgroupCase, PointLineCounts)> {
    let cases = applicable_cases(q);
    let mut out = Vec::new();
    for ca in &cases {
        for cl in &cases {
            let counts = PointLineCounts { v: ca.index.clone(), b: cl.index.clone() };
            if check_count_bounds(&counts) {
                out.push((ca.clone(), cl.clone(), counts));
            }
        }
    }
    out
}

/// Table text with evaluated indices for side-by-side comparison.
pub fn dump(q: &PrimePower) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "Maximal subgroups of T = PSU(3,{q}), |T| = {order}\n",
        q = q.q(),
        order = group_order(q)
    ));
    s.push_str(&format!(
        "{:<4} {:<36} {:<34} {:>24} {:>20}\n",
        "row", "structure of M.T", "notes", "[T:M.T]", "|M.T|"
    ));
    for case in applicable_cases(q) {
        let so = structure_order(case.tag, q, case.q0.map(|q0| (q0, case.r.unwrap())));
        let extra = match case.q0 {
            Some(q0) => format!(" [q0={} r={}]", q0, case.r.unwrap()),
            None => String::new(),
        };
        s.push_str(&format!(
            "({:<2}) {:<36} {:<34} {:>24} {:>20}\n",
            case.tag.label(),
            format!("{}{}", case.tag.structure(), extra),
            case.tag.notes(),
            case.index.to_string(),
            so.to_string()
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gq::solve_order;
    use std::collections::BTreeSet;

    fn pp(q: u64) -> PrimePower {
        PrimePower::from_value(q).unwrap()
    }

    #[test]
    fn group_order_examples() {
        // 27*8*28/1, 125*24*126/3, 64*15*65/1
        assert_eq!(group_order(&pp(3)), Int::from(6048u32));
        assert_eq!(group_order(&pp(5)), Int::from(126000u32));
        assert_eq!(group_order(&pp(4)), Int::from(62400u32));
        assert_eq!(group_order(&pp(2)), Int::from(72u32));
        assert_eq!(group_order(&pp(8)), Int::from(5_515_776u64));
    }

    #[test]
    fn applicability_examples() {
        let t5: BTreeSet<_> = applicable_types(&pp(5)).into_iter().collect();
        let expected: BTreeSet<_> = [A, B, CPrime, DPrime, GPrime, HPrime, J, K].into_iter().collect();
        assert_eq!(t5, expected);

        let t11 = applicable_types(&pp(11));
        assert!(t11.contains(&G) && t11.contains(&I));
        assert!(!t11.contains(&H)); // 11 = 4 mod 7

        let t3 = applicable_types(&pp(3));
        assert!(!t3.contains(&C) && !t3.contains(&E));
        assert!(t3.contains(&H)); // 3 = 3 mod 7

        let t8 = applicable_types(&pp(8));
        assert!(t8.contains(&F));
        assert!(!applicable_types(&pp(9)).contains(&F)); // 9 = 3^2, exponent not odd prime
    }

    #[test]
    fn index_examples() {
        assert_eq!(index_of(A, &pp(3), None), Int::from(28u32));
        assert_eq!(index_of(A, &pp(4), None), Int::from(65u32));
        assert_eq!(index_of(A, &pp(5), None), Int::from(126u32));
        assert_eq!(index_of(K, &pp(5), None), Int::from(50u32));
        // (f, q=8, q0=2, r=3) -> (512*63*513)/(3*8*3*9) = 25536
        let q8 = pp(8);
        let q0 = pp(2);
        assert_eq!(index_of(F, &q8, Some((q0, 3))), Int::from(25536u32));
    }

    // Lemma 4.2's computer-algebra output, recomputed independently.
    #[test]
    fn q5_index_set_exact() {
        let indices: BTreeSet<Int> = applicable_cases(&pp(5)).iter().map(|c| c.index.clone()).collect();
        let expected: BTreeSet<Int> =
            [6000u32, 1750, 750, 525, 175, 126, 50].into_iter().map(Int::from).collect();
        assert_eq!(indices, expected);
    }

    #[test]
    fn index_times_structure_order_is_group_order() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 512] {
            let q = pp(q);
            let order = group_order(&q);
            for case in applicable_cases(&q) {
                let so = structure_order(case.tag, &q, case.q0.map(|q0| (q0, case.r.unwrap())));
                assert_eq!(
                    &case.index * &so,
                    order,
                    "row ({}) at q={}",
                    case.tag.label(),
                    q.q()
                );
                assert!(case.index.divides(&order));
            }
        }
    }

    // The pair (b,c) fails the count bounds for every q: checked over a range
    // here, certified with the envelope polynomial in the eliminators.
    #[test]
    fn pair_b_c_always_fails_bounds() {
        for q in crate::primes::enumerate_prime_powers(3, 400) {
            if !C.applies(&q) {
                continue;
            }
            let v = index_of(B, &q, None);
            let b = index_of(C, &q, None);
            assert!(!check_count_bounds(&PointLineCounts { v, b }), "q = {}", q.q());
        }
    }

    #[test]
    fn candidate_counts_include_symmetric_pairs() {
        let q3 = pp(3);
        let pairs = candidate_counts(&q3);
        assert!(pairs.iter().any(|(a, l, c)| a.tag == l.tag && c.v == c.b));
        // None of the symmetric q=3 candidates solves to a thick order.
        for (_, _, c) in &pairs {
            for o in solve_order(c) {
                assert!(!o.is_thick(), "unexpected thick order for counts {:?}", c);
            }
        }
    }

    #[test]
    fn dump_contains_all_rows() {
        let text = dump(&pp(5));
        for label in ["(a )", "(c')", "(d')", "(g')", "(h')", "(j )", "(k )"] {
            assert!(text.contains(label), "missing row {} in:\n{}", label, text);
        }
    }
}
