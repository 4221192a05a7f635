//! Base-q0 digit ladders for the type (f) line-stabilizer cases.
//!
//! In those cases s+1 = S(q0) k and t+1 = N(q0) k for explicit coprime
//! cofactors, so st+1 = S N k^2 - (S+N) k + 2, and divisibility of the line
//! count by a high power of p forces q0^M | st+1. The ladder determines the
//! base-q0 digits of k one congruence at a time: S = 0 and N = 1 mod q0
//! make the linearization a unit multiple of the unknown digit, so each
//! step admits at most one digit, and the constraints past the last digit
//! wipe the remaining candidate out.
//!
//! The published step tables for r = 13 (per-step multipliers 3..243 resp.
//! 3..3888, the bounded lambda intermediates, and the endgame divisors 236
//! resp. 12977) are transcribed as data and replayed against the digits the
//! generic propagation finds.

use crate::int::Int;
use crate::primes::PrimePower;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LadderError {
    #[error("step multiplier {eps} shares a factor with q0 = {q0}")]
    EpsilonNotCoprime { eps: i64, q0: u64 },
}

/// Which point stabilizer the ladder serves, against a type (f) line
/// stabilizer with q = q0^r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LadderContext {
    /// type (c) points: s+1 = q0^3 (q0^2-1)(q0^3+1) k / 3 per line factor
    CF,
    /// type (d) points
    DF,
}

impl LadderContext {
    pub fn name(&self) -> &'static str {
        match self {
            LadderContext::CF => "cf",
            LadderContext::DF => "df",
        }
    }

    /// s+1 = S(q0) k.
    pub fn s_factor(&self, q0: &Int) -> Int {
        let one = Int::ONE;
        match self {
            LadderContext::CF => {
                (q0.pow(3) * (q0.pow(2) - &one) * (q0 + &one)).div_exact(&Int::from(3u32))
            }
            LadderContext::DF => {
                (q0.pow(3) * (q0 - &one) * (q0.pow(2) - q0 + &one)).div_exact(&Int::from(6u32))
            }
        }
    }

    /// t+1 = N(q0) k.
    pub fn t_factor(&self, q0: &Int, r: u64) -> Int {
        let one = Int::ONE;
        match self {
            LadderContext::CF => {
                let num = q0.pow(2 * r as u32) - q0.pow(r as u32) + &one;
                num.div_exact(&(q0.pow(2) - q0 + &one))
            }
            LadderContext::DF => {
                let root = (q0.pow(r as u32) + &one).div_exact(&(q0 + &one));
                &root * &root
            }
        }
    }

    /// Number of base-q0 digits of k, from the per-r bound on k.
    pub fn digit_count(&self, r: u64) -> usize {
        match r {
            5 => 4,
            7 => 7,
            11 => 12,
            13 => 15,
            _ => panic!("ladders run for r in {{5, 7, 11, 13}}"),
        }
    }

    /// Exponent M with q0^M | st+1: the p-part of the line count minus the
    /// digit-count allowance for (t+1)_p.
    pub fn modulus_exponent(&self, r: u64) -> usize {
        3 * (r as usize - 1) - self.digit_count(r)
    }
}

/// One transcribed step of a published r = 13 table, covering steps 2..=14.
/// The chained relation is
///   q0 * lambda_i = (eps_i / eps_(i-1)) * lambda_(i-1) + b_i - eps_i * a_i,
/// with lambda_i claimed to lie in [lo, hi].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TableStep {
    pub eps: i64,
    pub b: i64,
    pub lo: i64,
    pub hi: i64,
}

const fn ts(eps: i64, b: i64, lo: i64, hi: i64) -> TableStep {
    TableStep { eps, b, lo, hi }
}

const CF_TABLE: [TableStep; 13] = [
    ts(3, 3, -2, 0),
    ts(3, -2, -3, -1),
    ts(3, 2, -2, 0),
    ts(3, 0, -2, 0),
    ts(3, -2, -3, -1),
    ts(3, 2, -2, 0),
    ts(27, -18, -27, -1),
    ts(27, 32, -26, 0),
    ts(27, -14, -27, -1),
    ts(27, -10, -27, -1),
    ts(27, 6, -26, 0),
    ts(27, 36, -26, 0),
    ts(243, 0, -242, 0),
];

const DF_TABLE: [TableStep; 13] = [
    ts(3, 6, -2, 0),
    ts(3, -1, -3, -1),
    ts(3, -2, -3, -1),
    ts(6, 0, -6, -1),
    ts(6, 3, -5, 0),
    ts(6, 0, -5, 0),
    ts(108, -18, -108, -1),
    ts(108, 25, -107, 0),
    ts(108, 68, -107, 0),
    ts(216, 44, -215, 0),
    ts(216, -135, -216, -1),
    ts(216, -966, -216, -1),
    ts(3888, -29970, -3888, -1),
];

pub fn r13_table(ctx: LadderContext) -> &'static [TableStep] {
    match ctx {
        LadderContext::CF => &CF_TABLE,
        LadderContext::DF => &DF_TABLE,
    }
}

/// st + 1 as a function of k.
pub fn st_plus_1(s_fac: &Int, t_fac: &Int, k: &Int) -> Int {
    s_fac * t_fac * k * k - (s_fac + t_fac) * k + Int::TWO
}

#[derive(Debug, Serialize)]
pub struct StepRecord {
    pub index: usize,
    /// The digit, when the step admits exactly one continuation.
    pub digit: Option<u64>,
    pub branches: usize,
}

#[derive(Debug, Serialize)]
pub struct LadderRun {
    pub context: LadderContext,
    pub q0: u64,
    pub r: u64,
    pub digit_count: usize,
    pub modulus_exponent: usize,
    /// Digit vectors alive after the digit-determination steps.
    pub candidates: Vec<Vec<u64>>,
    /// Those also passing the full q0^M | st+1 constraint.
    pub survivors_mod: Vec<Int>,
    /// Those additionally satisfying both exact count equations.
    pub survivors: Vec<Int>,
    pub steps: Vec<StepRecord>,
}

/// Depth-first digit propagation at a concrete q0. Digit count and modulus
/// exponent are explicit so that reduced instances can be cross-checked
/// against brute force.
pub fn propagate_with(
    ctx: LadderContext,
    q0: &PrimePower,
    r: u64,
    digit_count: usize,
    modulus_exponent: usize,
) -> LadderRun {
    let q0v = q0.q();
    let q0i = q0.int();
    let s_fac = ctx.s_factor(&q0i);
    let t_fac = ctx.t_factor(&q0i, r);
    let sn = &s_fac * &t_fac;
    let s_plus_n = &s_fac + &t_fac;
    let mut steps = Vec::new();

    // frontier of digit prefixes K with q0^i | st+1(K)
    let mut frontier: Vec<(Int, Vec<u64>)> = vec![(Int::ZERO, Vec::new())];
    for i in 0..digit_count {
        let q_pow_i = q0i.pow(i as u32);
        let mut next: Vec<(Int, Vec<u64>)> = Vec::new();
        for (k_prefix, digs) in &frontier {
            // E(K + a q0^i) = E(K) + E'(K) a q0^i + S N a^2 q0^(2i); divide
            // the congruence mod q0^(i+1) through by q0^i.
            let e_val = st_plus_1(&s_fac, &t_fac, k_prefix);
            let c0 = e_val
                .div_exact(&q_pow_i)
                .rem_euclid(&q0i)
                .to_u64()
                .expect("residue fits");
            let e_deriv = Int::TWO * &sn * k_prefix - &s_plus_n;
            let c1 = e_deriv.rem_euclid(&q0i).to_u64().expect("residue fits");
            let c2 = (&sn * &q_pow_i).rem_euclid(&q0i).to_u64().expect("residue fits");
            for a in 0..q0v {
                let val =
                    (c0 as u128 + c1 as u128 * a as u128 + c2 as u128 * a as u128 * a as u128)
                        % q0v as u128;
                if val == 0 {
                    let mut d = digs.clone();
                    d.push(a);
                    next.push((k_prefix + &(Int::from(a) * &q_pow_i), d));
                }
            }
        }
        let forced = if next.len() == 1 { Some(next[0].1[i]) } else { None };
        steps.push(StepRecord { index: i, digit: forced, branches: next.len() });
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }

    let modulus_full = q0i.pow(modulus_exponent as u32);
    let (v, b) = case_counts(ctx, q0, r);
    let mut candidates = Vec::new();
    let mut survivors_mod = Vec::new();
    let mut survivors = Vec::new();
    for (k, digs) in &frontier {
        candidates.push(digs.clone());
        if !k.is_positive() {
            continue;
        }
        let st1 = st_plus_1(&s_fac, &t_fac, k);
        if !st1.rem_euclid(&modulus_full).is_zero() {
            continue;
        }
        survivors_mod.push(k.clone());
        let s1 = &s_fac * k;
        let t1 = &t_fac * k;
        if &s1 * &st1 == v && &t1 * &st1 == b {
            survivors.push(k.clone());
        }
    }
    survivors_mod.sort();
    survivors.sort();

    LadderRun {
        context: ctx,
        q0: q0v,
        r,
        digit_count,
        modulus_exponent,
        candidates,
        survivors_mod,
        survivors,
        steps,
    }
}

/// Production propagation with the case-derived digit count and modulus.
pub fn propagate(ctx: LadderContext, q0: &PrimePower, r: u64) -> LadderRun {
    propagate_with(ctx, q0, r, ctx.digit_count(r), ctx.modulus_exponent(r))
}

/// The exact (v, b) pair of the case at q = q0^r.
pub fn case_counts(ctx: LadderContext, q0: &PrimePower, r: u64) -> (Int, Int) {
    let one = Int::ONE;
    let q0i = q0.int();
    let q = q0i.pow(r as u32);
    let v = match ctx {
        LadderContext::CF => {
            (q.pow(3) * (q.pow(2) - &one) * (&q + &one)).div_exact(&Int::from(3u32))
        }
        LadderContext::DF => {
            (q.pow(3) * (&q - &one) * (q.pow(2) - &q + &one)).div_exact(&Int::from(6u32))
        }
    };
    // type (f) index with c = gcd(3, (q+1)/(q0+1))
    let ratio = (&q + &one).div_exact(&(&q0i + &one));
    let c = Int::from(if ratio.div_rem(&Int::from(3u32)).1.is_zero() { 3u32 } else { 1u32 });
    let b = (q.pow(3) * (q.pow(2) - &one) * (q.pow(3) + &one)).div_exact(
        &(c * q0i.pow(3) * (q0i.pow(2) - &one) * (q0i.pow(3) + &one)),
    );
    (v, b)
}

/// Brute-force oracle for reduced instances: every k in [1, q0^digits) with
/// q0^m | st+1, by modular evaluation.
pub fn brute_force_reduced(
    ctx: LadderContext,
    q0: &PrimePower,
    r: u64,
    digit_count: usize,
    modulus_exponent: usize,
) -> Vec<Int> {
    let q0i = q0.int();
    let modulus = (q0.q() as u128).pow(modulus_exponent as u32);
    let mi = Int::from_big(num_bigint::BigInt::from(modulus));
    let s_fac = ctx.s_factor(&q0i).rem_euclid(&mi).to_u64().unwrap() as u128;
    let t_fac = ctx.t_factor(&q0i, r).rem_euclid(&mi).to_u64().unwrap() as u128;
    let top = (q0.q() as u128).pow(digit_count as u32);
    let mut out = Vec::new();
    for k in 1..top {
        let kk = k % modulus;
        let quad = s_fac * t_fac % modulus * kk % modulus * kk % modulus;
        let lin = (s_fac + t_fac) % modulus * kk % modulus;
        if (quad + 2 * modulus - lin + 2) % modulus == 0 {
            out.push(Int::from_big(num_bigint::BigInt::from(k)));
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct TableWalk {
    pub context: LadderContext,
    pub q0: u64,
    pub lambdas: Vec<i64>,
    pub congruences_verified: bool,
    pub intervals_verified: bool,
    /// The endgame fact that rules the candidate out.
    pub endgame: String,
    pub eliminated: bool,
}

/// Replays a published r = 13 table against the digits the generic
/// propagation found: the per-step congruence shapes, integrality and
/// interval bounds of the lambda multipliers, and the endgame divisor.
pub fn table_walk_r13(
    ctx: LadderContext,
    q0: &PrimePower,
    digits: &[u64],
) -> Result<TableWalk, LadderError> {
    let q0v = q0.q();
    let table = r13_table(ctx);
    for step in table {
        if gcd_i64(step.eps, q0v as i64) != 1 {
            return Err(LadderError::EpsilonNotCoprime { eps: step.eps, q0: q0v });
        }
    }
    assert_eq!(digits.len(), 15, "r = 13 table expects 15 digits");
    let q0i = q0.int();
    let s_fac = ctx.s_factor(&q0i);
    let t_fac = ctx.t_factor(&q0i, 13);
    let k = digits
        .iter()
        .enumerate()
        .fold(Int::ZERO, |acc, (i, &a)| acc + Int::from(a) * q0i.pow(i as u32));
    let e = st_plus_1(&s_fac, &t_fac, &k);

    // steps 0 and 1 force the two leading digits
    let (a0, a1) = match ctx {
        LadderContext::CF => (2u64, q0v - 2),
        LadderContext::DF => (2u64, 4),
    };
    let mut congruences = digits[0] == a0 && digits[1] == a1;
    let mut intervals = true;

    let mut lambdas: Vec<i64> = Vec::new();
    let mut prev_eps = 1i64;
    let mut prev_lam = 0i64;
    for (offset, (step, &a)) in table.iter().zip(digits[2..].iter()).enumerate() {
        let i = offset + 2;
        let ratio = step.eps / prev_eps;
        debug_assert_eq!(ratio * prev_eps, step.eps, "multiplier schedule is multiplicative");
        let expr = if i == 2 {
            step.b - step.eps * a as i64
        } else {
            ratio * prev_lam + step.b - step.eps * a as i64
        };
        if expr.rem_euclid(q0v as i64) != 0 {
            intervals = false;
            break;
        }
        let lam = expr.div_euclid(q0v as i64);
        if lam < step.lo || lam > step.hi {
            intervals = false;
        }
        // the published shape: eps (st+1) = expr q0^i  (mod q0^(i+1))
        let modulus = q0i.pow(i as u32 + 1);
        let lhs = (Int::from(step.eps) * &e).rem_euclid(&modulus);
        let rhs = (Int::from(expr) * q0i.pow(i as u32)).rem_euclid(&modulus);
        if lhs != rhs {
            congruences = false;
        }
        lambdas.push(lam);
        prev_eps = step.eps;
        prev_lam = lam;
    }

    let lam14 = *lambdas.last().unwrap_or(&0);
    let (endgame, eliminated) = match ctx {
        LadderContext::CF => {
            // step 15 requires q0 | lambda14 + 128 with lambda14 + 128 in
            // [-114, 128]; for q0 > 236 either that fails outright, or
            // lambda14 = -128 and step 16 reduces to q0 | 236.
            let modulus = q0i.pow(16);
            let shape15 = (Int::from(243) * &e).rem_euclid(&modulus)
                == (Int::from(lam14 + 128) * q0i.pow(15)).rem_euclid(&modulus);
            if !shape15 {
                congruences = false;
            }
            let w = lam14 + 128;
            if !(-114..=128).contains(&w) {
                intervals = false;
            }
            if w.rem_euclid(q0v as i64) != 0 {
                (
                    format!(
                        "eliminated at step 15: q0 = {} does not divide lambda14 + 128 = {}",
                        q0v, w
                    ),
                    true,
                )
            } else {
                // w = 0 is the only multiple of q0 > 236 in [-114, 128]
                (
                    format!(
                        "lambda14 = {}; step 16 reduces to q0 | 236, false for q0 = {}",
                        lam14, q0v
                    ),
                    lam14 == -128 && 236 % q0v != 0,
                )
            }
        }
        LadderContext::DF => {
            // step 15 requires q0 | lambda14 - 12977, which lies in
            // [-16865, -12978]: impossible once q0 > 16865.
            let modulus = q0i.pow(16);
            let shape15 = (Int::from(3888) * &e).rem_euclid(&modulus)
                == (Int::from(lam14 - 12977) * q0i.pow(15)).rem_euclid(&modulus);
            if !shape15 {
                congruences = false;
            }
            let w = lam14 - 12977;
            if !(-16865..=-12978).contains(&w) {
                intervals = false;
            }
            (
                format!(
                    "eliminated at step 15: q0 | lambda14 - 12977 = {} needs q0 <= 16865, \
                     against q0 = {}",
                    w, q0v
                ),
                w.rem_euclid(q0v as i64) != 0,
            )
        }
    };

    Ok(TableWalk {
        context: ctx,
        q0: q0v,
        lambdas,
        congruences_verified: congruences,
        intervals_verified: intervals,
        endgame,
        eliminated,
    })
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u64) -> PrimePower {
        PrimePower::from_value(q).unwrap()
    }

    #[test]
    fn cofactors_reduce_as_the_ladder_needs() {
        for q0 in [2u64, 3, 4, 5, 7, 9, 11, 13, 239, 241, 256, 243] {
            let q0i = Int::from(q0);
            for ctx in [LadderContext::CF, LadderContext::DF] {
                let s = ctx.s_factor(&q0i);
                let n = ctx.t_factor(&q0i, 13);
                // S = 0 and N = 1 mod q0 give the unique-digit property
                assert!(s.rem_euclid(&q0i).is_zero(), "S at q0={}", q0);
                assert_eq!(n.rem_euclid(&q0i), Int::ONE, "N at q0={}", q0);
            }
        }
    }

    #[test]
    fn leading_digits_forced_and_no_survivors() {
        // published table: a0 = 2, a1 = q0 - 2 (cf) resp. a1 = 4 (df)
        for q0 in [239u64, 241, 251] {
            let run = propagate(LadderContext::CF, &pp(q0), 13);
            assert_eq!(run.steps[0].digit, Some(2));
            assert_eq!(run.steps[1].digit, Some(q0 - 2));
            assert!(run.survivors_mod.is_empty() && run.survivors.is_empty());
        }
        for q0 in [29989u64, 30011] {
            let run = propagate(LadderContext::DF, &pp(q0), 13);
            assert_eq!(run.steps[0].digit, Some(2));
            assert_eq!(run.steps[1].digit, Some(4));
            assert!(run.survivors.is_empty());
        }
    }

    #[test]
    fn table_walk_reproduces_published_tables() {
        // run the digit steps only (no trailing modulus) so a full digit
        // vector reaches the table replay
        let q0 = pp(239);
        let run = propagate_with(LadderContext::CF, &q0, 13, 15, 15);
        assert_eq!(run.candidates.len(), 1);
        let walk = table_walk_r13(LadderContext::CF, &q0, &run.candidates[0]).unwrap();
        assert!(walk.congruences_verified, "{:?}", walk);
        assert!(walk.intervals_verified, "{:?}", walk);
        assert!(walk.eliminated, "{:?}", walk);

        let q0 = pp(30011);
        let run = propagate_with(LadderContext::DF, &q0, 13, 15, 15);
        assert_eq!(run.candidates.len(), 1);
        let walk = table_walk_r13(LadderContext::DF, &q0, &run.candidates[0]).unwrap();
        assert!(walk.congruences_verified, "{:?}", walk);
        assert!(walk.intervals_verified, "{:?}", walk);
        assert!(walk.eliminated, "{:?}", walk);
    }

    #[test]
    fn table_walk_rejects_eps_sharing_factor_with_q0() {
        // q0 = 243 = 3^5: the tabulated multipliers are powers of 3
        let q0 = pp(243);
        let run = propagate_with(LadderContext::CF, &q0, 13, 15, 15);
        let digits = &run.candidates[0];
        assert!(matches!(
            table_walk_r13(LadderContext::CF, &q0, digits),
            Err(LadderError::EpsilonNotCoprime { eps: 3, q0: 243 })
        ));
    }

    #[test]
    fn dfs_matches_brute_force_on_reduced_instances() {
        for q0 in crate::primes::enumerate_prime_powers(2, 50) {
            for ctx in [LadderContext::CF, LadderContext::DF] {
                for (dc, m) in [(3usize, 3usize), (4, 4)] {
                    let brute = brute_force_reduced(ctx, &q0, 13, dc, m);
                    let run = propagate_with(ctx, &q0, 13, dc, m);
                    assert_eq!(
                        run.survivors_mod,
                        brute,
                        "ctx={:?} q0={} dc={} m={}",
                        ctx,
                        q0.q(),
                        dc,
                        m
                    );
                }
            }
        }
    }
}
