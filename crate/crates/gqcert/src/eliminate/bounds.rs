//! Exact feasibility regions from the count bounds 2v^5 > b^4, 2b^5 > v^4.
//!
//! For a pair of stabilizer types the indices are P(q)/c with a fixed
//! polynomial P and a small constant c ranging over the gcd values the row
//! can take. The envelope predicate uses the constants most favorable to
//! feasibility, so its failure is final: once the envelope polynomial
//! H = Pb^4 cv^5 - 2 Pv^5 cb^4 (or its dual) has gone positive past its
//! largest real root, no q beyond can be feasible. The scan limit comes
//! from the Fujiwara root bound, and the per-q feasible set is decided by
//! the exact cross-multiplied comparison with the true per-q constants.

use super::EngineParams;
use crate::catalog::{self, SubgroupTag};
use crate::gq::{check_count_bounds, PointLineCounts};
use crate::int::Int;
use crate::poly::{IntPoly, Poly};
use crate::primes::{enumerate_prime_powers, PrimePower};
use rayon::prelude::*;
use serde::Serialize;

/// Index shape of a row: index = P(q) / c with c in [c_lo, c_hi].
pub struct IndexShape {
    pub poly: IntPoly,
    pub c_lo: u64,
    pub c_hi: u64,
}

fn xpoly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64_slice(coeffs)
}

/// The big polynomial q^3 (q^2 - 1)(q^3 + 1).
fn big_poly() -> IntPoly {
    let x3 = xpoly(&[0, 0, 0, 1]);
    let q2m1 = xpoly(&[-1, 0, 1]);
    let q3p1 = xpoly(&[1, 0, 0, 1]);
    x3.mul(&q2m1).mul(&q3p1)
}

pub fn index_shape(tag: SubgroupTag) -> IndexShape {
    use SubgroupTag::*;
    match tag {
        A => IndexShape { poly: xpoly(&[1, 0, 0, 1]), c_lo: 1, c_hi: 1 },
        B => IndexShape { poly: xpoly(&[0, 0, 1, -1, 1]), c_lo: 1, c_hi: 1 },
        C => IndexShape {
            // q^3 (q^2-1)(q+1)
            poly: xpoly(&[0, 0, 0, 1]).mul(&xpoly(&[-1, 0, 1])).mul(&xpoly(&[1, 1])),
            c_lo: 3,
            c_hi: 3,
        },
        D => IndexShape {
            // q^3 (q-1)(q^2-q+1)
            poly: xpoly(&[0, 0, 0, 1]).mul(&xpoly(&[-1, 1])).mul(&xpoly(&[1, -1, 1])),
            c_lo: 6,
            c_hi: 6,
        },
        E => IndexShape {
            // q^2 (q^3+1), divided by gcd(3, q+1)
            poly: xpoly(&[0, 0, 1]).mul(&xpoly(&[1, 0, 0, 1])),
            c_lo: 1,
            c_hi: 3,
        },
        G => IndexShape { poly: big_poly(), c_lo: 72 * 3, c_hi: 72 * 9 },
        H => IndexShape { poly: big_poly(), c_lo: 168, c_hi: 168 * 3 },
        I => IndexShape { poly: big_poly(), c_lo: 360, c_hi: 360 * 3 },
        _ => panic!("no polynomial index shape for row ({})", tag.label()),
    }
}

/// Index shape of the type (f) row in the variable q0, for fixed exponent r.
pub fn f_index_shape(r: u64) -> IndexShape {
    // q^3 (q^2-1)(q^3+1) at q = q0^r, divided by q0^3 (q0^2-1)(q0^3+1):
    // exact polynomial since r is odd.
    let sub = |poly: &IntPoly| {
        let mono = {
            let mut c = vec![Int::ZERO; r as usize + 1];
            c[r as usize] = Int::ONE;
            Poly::new(c)
        };
        poly.compose(&mono)
    };
    let num = sub(&big_poly());
    let den = xpoly(&[0, 0, 0, 1]).mul(&xpoly(&[-1, 0, 1])).mul(&xpoly(&[1, 0, 0, 1]));
    // divide by x^3 first, then the two monic factors
    let shifted = Poly::new(num.coeffs()[3..].to_vec());
    let den_monic = Poly::new(den.coeffs()[3..].to_vec());
    let poly = shifted.div_exact_monic(&den_monic);
    IndexShape { poly, c_lo: 1, c_hi: 3 }
}

/// Wraps a point-side shape at q = q0^r for the (x, f) pairs.
pub fn composed_shape(tag: SubgroupTag, r: u64) -> IndexShape {
    let base = index_shape(tag);
    let mut c = vec![Int::ZERO; r as usize + 1];
    c[r as usize] = Int::ONE;
    let mono = Poly::new(c);
    IndexShape { poly: base.poly.compose(&mono), c_lo: base.c_lo, c_hi: base.c_hi }
}

#[derive(Clone, Debug, Serialize)]
pub enum BoundVerdict {
    /// The bound predicate fails for every integer beyond `scan_limit`;
    /// `envelope_max` is the largest integer passing with the most
    /// favorable constants.
    Bounded { envelope_max: Option<u64>, scan_limit: u64 },
    /// Both directions pass asymptotically under worst-case constants.
    Unbounded { reason: String },
}

/// Envelope analysis: which direction of the count bounds eventually fails,
/// and up to which integer anything can pass.
pub fn envelope(v_shape: &IndexShape, b_shape: &IndexShape) -> BoundVerdict {
    let cv_lo = Int::from(v_shape.c_lo).pow(5);
    let cb_hi = Int::from(b_shape.c_hi).pow(4);
    // direction 1: 2 v^5 > b^4 fails surely when h1 > 0
    let h1 = b_shape
        .poly
        .pow(4)
        .scale(&cv_lo)
        .sub(&v_shape.poly.pow(5).scale(&(Int::TWO * &cb_hi)));
    // direction 2: 2 b^5 > v^4 fails surely when h2 > 0
    let cb_lo = Int::from(b_shape.c_lo).pow(5);
    let cv_hi = Int::from(v_shape.c_hi).pow(4);
    let h2 = v_shape
        .poly
        .pow(4)
        .scale(&cb_lo)
        .sub(&b_shape.poly.pow(5).scale(&(Int::TWO * &cv_hi)));

    let positive_lead = |p: &IntPoly| p.leading().map_or(false, |c| c.is_positive());
    let fail_poly = if positive_lead(&h1) {
        h1
    } else if positive_lead(&h2) {
        h2
    } else {
        return BoundVerdict::Unbounded {
            reason: "both cross-multiplied bound directions pass asymptotically under \
                     worst-case constants"
                .into(),
        };
    };
    let scan_limit = fail_poly.real_root_bound().expect("nonzero polynomial").ceil() as u64 + 1;

    // Largest integer passing the envelope predicate, scanning down from the
    // root bound: above the largest real root the fail polynomial stays
    // positive, so the first passing integer seen is the maximum.
    let envelope_pass = |x: u64| -> bool {
        let xi = Int::from(x);
        let pv = v_shape.poly.evaluate(&xi);
        let pb = b_shape.poly.evaluate(&xi);
        let d1 = Int::TWO * pv.pow(5) * Int::from(b_shape.c_hi).pow(4)
            > pb.pow(4) * Int::from(v_shape.c_lo).pow(5);
        let d2 = Int::TWO * pb.pow(5) * Int::from(v_shape.c_hi).pow(4)
            > pv.pow(4) * Int::from(b_shape.c_lo).pow(5);
        d1 && d2
    };
    // f64 pre-screen with a guard band, exact on anything near a sign change
    let coarse = |x: u64| -> Option<bool> {
        let mut val = 0f64;
        let mut mag = 0f64;
        for c in fail_poly.coeffs().iter().rev() {
            let cf = int_to_f64(c);
            val = val * x as f64 + cf;
            mag = mag * x as f64 + cf.abs();
        }
        if val.abs() > mag * 1e-9 {
            Some(val > 0.0)
        } else {
            None
        }
    };
    let mut envelope_max = None;
    let mut x = scan_limit;
    while x >= 2 {
        let fails = match coarse(x) {
            Some(sign) => sign,
            None => !envelope_pass(x),
        };
        if !fails && envelope_pass(x) {
            envelope_max = Some(x);
            break;
        }
        x -= 1;
    }
    BoundVerdict::Bounded { envelope_max, scan_limit }
}

fn int_to_f64(v: &Int) -> f64 {
    match v {
        Int::Small(s) => *s as f64,
        Int::Big(b) => num_traits::ToPrimitive::to_f64(b).unwrap_or(f64::MAX),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairBound {
    pub alpha: SubgroupTag,
    pub line: SubgroupTag,
    pub verdict: BoundVerdict,
    /// Prime powers where both rows apply and the exact bounds pass.
    pub feasible: Vec<u64>,
}

/// The exact feasibility region for a pair of non-(f) rows.
pub fn derive_q_bound(alpha: SubgroupTag, line: SubgroupTag, params: &EngineParams) -> PairBound {
    let v_shape = index_shape(alpha);
    let b_shape = index_shape(line);
    let verdict = envelope(&v_shape, &b_shape);
    let hi = match &verdict {
        BoundVerdict::Bounded { scan_limit, .. } => *scan_limit,
        BoundVerdict::Unbounded { .. } => params.cap(2000, 16),
    };
    let feasible: Vec<u64> = enumerate_prime_powers(3, hi)
        .par_iter()
        .filter(|q| alpha.applies(q) && line.applies(q))
        .filter(|q| {
            let counts = PointLineCounts {
                v: catalog::index_of(alpha, q, None),
                b: catalog::index_of(line, q, None),
            };
            check_count_bounds(&counts)
        })
        .map(|q| q.q())
        .collect();
    PairBound { alpha, line, verdict, feasible }
}

/// The exact feasibility region in q0 for an (alpha, f) pair at fixed r.
pub fn derive_q_bound_f(alpha: SubgroupTag, r: u64, params: &EngineParams) -> PairBound {
    let v_shape = composed_shape(alpha, r);
    let b_shape = f_index_shape(r);
    let verdict = envelope(&v_shape, &b_shape);
    let hi = match &verdict {
        BoundVerdict::Bounded { scan_limit, .. } => *scan_limit,
        BoundVerdict::Unbounded { .. } => params.cap(300, 16),
    };
    let feasible: Vec<u64> = enumerate_prime_powers(2, hi)
        .par_iter()
        .filter(|q0| {
            // alpha must apply at q = q0^r (overflow-safe: skip huge cells)
            match q0.q().checked_pow(r as u32) {
                Some(q) => PrimePower::from_value(q).map(|qq| alpha.applies(&qq)).unwrap_or(false),
                None => false,
            }
        })
        .filter(|q0| {
            let q = PrimePower::from_value(q0.q().pow(r as u32)).expect("prime power");
            let counts = PointLineCounts {
                v: catalog::index_of(alpha, &q, None),
                b: catalog::index_of(SubgroupTag::F, &q, Some((**q0, r))),
            };
            check_count_bounds(&counts)
        })
        .map(|q0| q0.q())
        .collect();
    PairBound { alpha, line: SubgroupTag::F, verdict, feasible }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SubgroupTag::*;

    #[test]
    fn envelope_cutoffs_for_the_published_pairs() {
        let p = EngineParams::default();
        let get = |a, l| match derive_q_bound(a, l, &p).verdict {
            BoundVerdict::Bounded { envelope_max, .. } => envelope_max,
            BoundVerdict::Unbounded { .. } => panic!("expected bounded pair"),
        };
        // published: (c,g) 38096, (d,g) 6730, (d,h) 4067, (d,i) 18701, (b,d) 8
        assert_eq!(get(C, G), Some(38096));
        assert_eq!(get(D, G), Some(6730));
        assert_eq!(get(D, H), Some(4067));
        assert_eq!(get(D, I), Some(18701));
        assert_eq!(get(B, D), Some(7)); // the paper's rounded statement is q <= 8
    }

    #[test]
    fn e_pairs_match_published_maxima_exactly() {
        let p = EngineParams::default();
        let max_feasible = |a, l| derive_q_bound(a, l, &p).feasible.last().copied();
        assert_eq!(max_feasible(E, G), Some(17));
        assert_eq!(max_feasible(E, H), Some(19));
        assert_eq!(max_feasible(E, I), Some(11));
    }

    #[test]
    fn b_c_pair_is_infeasible_everywhere() {
        let p = EngineParams::default();
        let pb = derive_q_bound(B, C, &p);
        assert!(pb.feasible.is_empty());
        match pb.verdict {
            BoundVerdict::Bounded { envelope_max, .. } => assert!(envelope_max.is_none()),
            _ => panic!("expected bounded"),
        }
    }

    #[test]
    fn b_e_is_unbounded() {
        let p = EngineParams::default();
        let pb = derive_q_bound(B, E, &p);
        assert!(matches!(pb.verdict, BoundVerdict::Unbounded { .. }));
    }

    #[test]
    fn f_pair_for_type_b_is_only_q0_2_r_3() {
        let p = EngineParams::default();
        let pb = derive_q_bound_f(B, 3, &p);
        assert_eq!(pb.feasible, vec![2]);
        let pb5 = derive_q_bound_f(B, 5, &p);
        assert!(pb5.feasible.is_empty());
    }

    #[test]
    fn f_pairs_for_c_and_d_are_unbounded_for_small_r_and_dead_past_13() {
        let p = EngineParams::default();
        for a in [C, D] {
            for r in [3u64, 5, 7, 11, 13] {
                let pb = derive_q_bound_f(a, r, &p);
                assert!(
                    matches!(pb.verdict, BoundVerdict::Unbounded { .. }),
                    "({:?}, f) r = {}",
                    a,
                    r
                );
            }
            let pb = derive_q_bound_f(a, 17, &p);
            match pb.verdict {
                BoundVerdict::Bounded { envelope_max, .. } => {
                    assert!(envelope_max.is_none(), "({:?}, f) r = 17 must be empty", a)
                }
                _ => panic!("expected bounded at r = 17"),
            }
        }
        // (e, f): r = 3 unbounded, r = 5 already dead
        let pb = derive_q_bound_f(E, 3, &p);
        assert!(matches!(pb.verdict, BoundVerdict::Unbounded { .. }));
        let pb = derive_q_bound_f(E, 5, &p);
        match pb.verdict {
            BoundVerdict::Bounded { envelope_max, .. } => assert!(envelope_max.is_none()),
            _ => panic!("expected bounded at (e, f) r = 5"),
        }
    }
}
