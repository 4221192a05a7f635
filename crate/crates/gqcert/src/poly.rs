//! Dense polynomial arithmetic over exact coefficient rings.
//!
//! `Poly<Int>` handles the univariate identities of the elimination lemmas;
//! nesting (`Poly<Poly<Int>>`, ...) gives the two- and three-variable
//! expansions that certify the displayed reductions, with one variable's
//! coefficients treated as polynomials in the next.

use crate::int::Int;
use crate::primes::ArithError;

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn from_i64(v: i64) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Ring for Int {
    fn zero() -> Int {
        Int::ZERO
    }
    fn one() -> Int {
        Int::ONE
    }
    fn add(&self, rhs: &Int) -> Int {
        self + rhs
    }
    fn neg(&self) -> Int {
        -self
    }
    fn mul(&self, rhs: &Int) -> Int {
        self * rhs
    }
    fn from_i64(v: i64) -> Int {
        Int::from(v)
    }
}

/// Coefficients ascending by degree; the vector never ends in a zero.
#[derive(Clone, PartialEq)]
pub struct Poly<C: Ring> {
    coeffs: Vec<C>,
}

pub type IntPoly = Poly<Int>;

impl<C: Ring> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Poly<C> {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly<C> {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Poly<C> {
        Poly::new(vec![c])
    }

    pub fn x() -> Poly<C> {
        Poly::new(vec![C::zero(), C::one()])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Poly::new(coeffs)
    }

    pub fn sub(&self, rhs: &Poly<C>) -> Poly<C> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &C) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Poly<C> {
        let mut out = Poly::constant(C::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Horner evaluation at a ring point.
    pub fn evaluate(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitution: self(inner(x)).
    pub fn compose(&self, inner: &Poly<C>) -> Poly<C> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Quotient and remainder after division by a monic polynomial.
    pub fn divmod_monic(&self, m: &Poly<C>) -> (Poly<C>, Poly<C>) {
        assert!(
            m.leading().map_or(false, |c| *c == C::one()),
            "modulus must be monic"
        );
        let md = m.degree().expect("nonzero modulus");
        let mut rem = self.clone();
        let mut quot = vec![C::zero(); self.coeffs.len().saturating_sub(md)];
        while let Some(d) = rem.degree() {
            if d < md {
                break;
            }
            let lead = rem.coeffs[d].clone();
            quot[d - md] = lead.clone();
            // rem -= lead * x^(d-md) * m
            let mut shifted = vec![C::zero(); d - md];
            shifted.extend(m.coeffs.iter().map(|c| c.mul(&lead)));
            rem = rem.sub(&Poly::new(shifted));
            if rem.degree() == Some(d) {
                panic!("division did not reduce the degree");
            }
        }
        (Poly::new(quot), rem)
    }

    /// Remainder after division by a monic polynomial.
    pub fn rem_monic(&self, m: &Poly<C>) -> Poly<C> {
        self.divmod_monic(m).1
    }

    /// Exact division by a monic polynomial; panics on a nonzero remainder.
    pub fn div_exact_monic(&self, m: &Poly<C>) -> Poly<C> {
        let (q, r) = self.divmod_monic(m);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

impl<C: Ring> Ring for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(C::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn from_i64(v: i64) -> Self {
        Poly::constant(C::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> std::fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{:?}", c),
                1 => format!("({:?})*x", c),
                _ => format!("({:?})*x^{}", c, i),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl IntPoly {
    pub fn from_i64_slice(coeffs: &[i64]) -> IntPoly {
        Poly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Fujiwara bound: every real root has absolute value at most this.
    pub fn real_root_bound(&self) -> Result<f64, ArithError> {
        let n = self
            .degree()
            .ok_or_else(|| ArithError::OutOfRange("zero polynomial".into()))?;
        if n == 0 {
            return Ok(0.0);
        }
        let lead = big_to_f64(self.leading().unwrap()).abs();
        let mut bound: f64 = 0.0;
        for i in 1..=n {
            let c = big_to_f64(&self.coeff(n - i)).abs();
            if c > 0.0 {
                bound = bound.max((c / lead).powf(1.0 / i as f64));
            }
        }
        // 2x from the theorem, and a little slack for the float arithmetic.
        Ok(2.0 * bound * 1.0001 + 1.0)
    }

    /// All integer roots. Requires a nonzero polynomial.
    ///
    /// Nonzero candidate roots divide the lowest nonzero coefficient, which is
    /// factored by trial division: callers keep that coefficient moderate.
    pub fn integer_roots(&self) -> Result<Vec<Int>, ArithError> {
        if self.is_zero() {
            return Err(ArithError::OutOfRange("zero polynomial".into()));
        }
        let mut roots = Vec::new();
        let low = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        if low > 0 {
            roots.push(Int::ZERO);
        }
        let tail = IntPoly::new(self.coeffs[low..].to_vec());
        let c0 = tail.coeff(0).abs();
        let bound = tail.real_root_bound()?;
        for d in divisors_up_to(&c0, bound)? {
            for cand in [Int::from(d), -Int::from(d)] {
                if tail.evaluate(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }
}

fn big_to_f64(v: &Int) -> f64 {
    match v {
        Int::Small(s) => *s as f64,
        Int::Big(b) => {
            use num_traits::ToPrimitive;
            b.to_f64().unwrap_or(f64::MAX)
        }
    }
}

/// Positive divisors of n that are at most `bound`.
fn divisors_up_to(n: &Int, bound: f64) -> Result<Vec<u64>, ArithError> {
    let n = n
        .to_u64()
        .ok_or_else(|| ArithError::OutOfRange(format!("constant term too large: {}", n)))?;
    assert!(n > 0);
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            if (d as f64) <= bound {
                divs.push(d);
            }
            let other = n / d;
            if other != d && (other as f64) <= bound {
                divs.push(other);
            }
        }
        d += 1;
    }
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_slice(coeffs)
    }

    #[test]
    fn compose_binomial_identity() {
        // (x+1)^2 = x^2 + 2x + 1
        let sq = p(&[0, 0, 1]);
        let xplus1 = p(&[1, 1]);
        assert_eq!(sq.compose(&xplus1), p(&[1, 2, 1]));
    }

    #[test]
    fn evaluate_example() {
        // 3x^2(x^2 - x + 1) = 3x^4 - 3x^3 + 3x^2 at x = 5 is 1575.
        let f = p(&[0, 0, 3, -3, 3]);
        assert_eq!(f.evaluate(&Int::from(5u32)), Int::from(1575u32));
    }

    #[test]
    fn substitution_law_on_random_polys() {
        // evaluate(compose(f, g), x) == evaluate(f, evaluate(g, x)), degree <= 8.
        let mut state: u64 = 42;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64 % 9 - 4
        };
        for _ in 0..200 {
            let f = p(&(0..=8).map(|_| next()).collect::<Vec<_>>());
            let g = p(&(0..=4).map(|_| next()).collect::<Vec<_>>());
            for x in -3..=3i64 {
                let x = Int::from(x);
                assert_eq!(f.compose(&g).evaluate(&x), f.evaluate(&g.evaluate(&x)));
            }
        }
    }

    #[test]
    fn rem_monic_reduces() {
        // x^3 mod (x^2 - 2) = 2x
        let f = p(&[0, 0, 0, 1]);
        let m = p(&[-2, 0, 1]);
        assert_eq!(f.rem_monic(&m), p(&[0, 2]));
    }

    #[test]
    fn integer_roots_finds_all() {
        // (x-3)(x+5)x = x^3 + 2x^2 - 15x
        let f = p(&[0, -15, 2, 1]);
        let roots = f.integer_roots().unwrap();
        assert_eq!(roots, vec![Int::from(-5), Int::ZERO, Int::from(3)]);
        // 5q^3 - 18q^2 + 36q - 22 has no integer roots.
        let f = p(&[-22, 36, -18, 5]);
        assert!(f.integer_roots().unwrap().is_empty());
    }

    #[test]
    fn bivariate_identity_via_nesting() {
        // In Z[q][a]: (a + q)^2 - (a - q)^2 = 4aq.
        type P2 = Poly<IntPoly>;
        let a: P2 = Poly::x();
        let q: P2 = Poly::constant(IntPoly::x());
        let lhs = a.add(&q).pow(2).sub(&a.sub(&q).pow(2));
        let four_aq = a.mul(&q).scale(&IntPoly::from_i64_slice(&[4]));
        assert_eq!(lhs, four_aq);
    }
}
