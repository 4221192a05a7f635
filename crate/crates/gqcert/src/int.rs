//! Exact signed integers with a checked 128-bit fast path.
//!
//! Every counting quantity in this crate (point and line counts, subgroup
//! indices, digit-ladder residues) is an [`Int`]. Values live in `i128` until
//! an operation overflows, at which point they escalate to `num_bigint`
//! arbitrary precision. The representation is normalized: the `Big` variant
//! is only used for values outside the `i128` range, so equality and hashing
//! are well defined across variants.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i128),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);
    pub const TWO: Int = Int::Small(2);

    /// Normalizing constructor from a `BigInt`.
    pub fn from_big(b: BigInt) -> Int {
        match b.to_i128() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Int::Small(v) => *v > 0,
            Int::Big(b) => b.is_positive(),
        }
    }

    pub fn is_even(&self) -> bool {
        match self {
            Int::Small(v) => v % 2 == 0,
            Int::Big(b) => b.is_even(),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_i128(&self) -> Option<i128> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        match self {
            Int::Small(v) => u64::try_from(*v).ok(),
            Int::Big(_) => None,
        }
    }

    pub fn pow(&self, exp: u32) -> Int {
        let mut result = Int::ONE;
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                // i128::MIN has no absolute value; fall through to bigint.
                if *a != i128::MIN && *b != i128::MIN {
                    let (mut x, mut y) = (a.abs(), b.abs());
                    while y != 0 {
                        let r = x % y;
                        x = y;
                        y = r;
                    }
                    return Int::Small(x);
                }
                Int::from_big(self.to_big().gcd(&other.to_big()))
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    /// Truncated division with remainder (sign of remainder follows the dividend).
    pub fn div_rem(&self, d: &Int) -> (Int, Int) {
        assert!(!d.is_zero(), "division by zero");
        match (self, d) {
            (Int::Small(a), Int::Small(b)) if !(*a == i128::MIN && *b == -1) => {
                (Int::Small(a / b), Int::Small(a % b))
            }
            _ => {
                let (q, r) = self.to_big().div_rem(&d.to_big());
                (Int::from_big(q), Int::from_big(r))
            }
        }
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Int) -> Int {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact division: {} / {}", self, d);
        q
    }

    /// Does `self` divide `other`? Zero divides only zero.
    pub fn divides(&self, other: &Int) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Nonnegative residue of `self` modulo a positive modulus.
    pub fn rem_euclid(&self, m: &Int) -> Int {
        assert!(m.is_positive(), "modulus must be positive");
        let r = self.div_rem(m).1;
        if r.is_negative() {
            &r + m
        } else {
            r
        }
    }
}

macro_rules! int_from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Int {
            fn from(v: $t) -> Int {
                Int::Small(v as i128)
            }
        }
    )*}
}
int_from_prim!(i8, i16, i32, i64, i128, u8, u16, u32, u64, usize);

impl Add for &Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_add(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) + BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_sub(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) - BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) * BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b.clone()),
        }
    }
}

macro_rules! int_owned_ops {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Int {
            type Output = Int;
            fn $m(self, rhs: Int) -> Int {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Int> for Int {
            type Output = Int;
            fn $m(self, rhs: &Int) -> Int {
                (&self).$m(rhs)
            }
        }
        impl $tr<Int> for &Int {
            type Output = Int;
            fn $m(self, rhs: Int) -> Int {
                self.$m(&rhs)
            }
        }
    )*}
}
int_owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            // A normalized Big value lies outside the i128 range, so its sign decides.
            (Int::Small(_), Int::Big(b)) => {
                if b.is_positive() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (Int::Big(a), Int::Small(_)) => {
                if a.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Int::Big(a), Int::Big(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Int) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{}", v),
            Int::Big(b) => write!(f, "{}", b),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Int::from_big(s.parse::<BigInt>()?))
    }
}

// Counts such as b^4 at q ~ 4*10^4 exceed every JSON number range, so
// integers always serialize as decimal strings.
impl serde::Serialize for Int {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Int {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Compares `a^ea * num/den` against `b^eb` exactly, by cross-multiplication.
///
/// All inputs must be nonnegative and `den` positive; no rounding anywhere.
pub fn cmp_power_products(a: &Int, ea: u32, b: &Int, eb: u32, num: &Int, den: &Int) -> Ordering {
    assert!(
        !a.is_negative() && !b.is_negative() && !num.is_negative() && den.is_positive(),
        "cmp_power_products expects nonnegative operands and a positive denominator"
    );
    let lhs = a.pow(ea) * num;
    let rhs = b.pow(eb) * den;
    lhs.cmp(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i128) -> Int {
        Int::Small(v)
    }

    #[test]
    fn escalates_on_overflow_and_normalizes_back() {
        let big = Int::from(u64::MAX).pow(3);
        assert!(matches!(big, Int::Big(_)));
        let back = big.div_exact(&Int::from(u64::MAX).pow(2));
        assert_eq!(back, Int::from(u64::MAX));
        assert!(matches!(back, Int::Small(_)));
    }

    #[test]
    fn pow_and_gcd() {
        assert_eq!(int(3).pow(5), int(243));
        assert_eq!(int(0).pow(0), int(1));
        assert_eq!(int(-6).gcd(&int(15)), int(3));
        assert_eq!(int(0).gcd(&int(7)), int(7));
    }

    #[test]
    fn div_rem_and_divides() {
        let (q, r) = int(-7).div_rem(&int(3));
        assert_eq!((q, r), (int(-2), int(-1)));
        assert!(int(3).divides(&int(-9)));
        assert!(!int(4).divides(&int(-9)));
        assert_eq!(int(-7).rem_euclid(&int(3)), int(2));
    }

    #[test]
    fn ordering_across_variants() {
        let huge = Int::from(u64::MAX).pow(4);
        assert!(huge > int(i128::MAX - 1));
        assert!(-&huge < int(i128::MIN + 1));
        assert_eq!(huge.cmp(&huge), Ordering::Equal);
    }

    // v = b = 15: both Lemma 2.2(2) cross-multiplied bounds hold trivially.
    #[test]
    fn power_product_symmetric_case() {
        let v = int(15);
        assert_eq!(
            cmp_power_products(&v, 5, &v, 4, &Int::TWO, &Int::ONE),
            Ordering::Greater
        );
    }

    // v = 28, b = 28*27*26 (not a real case): 2 v^5 > b^4 is false.
    #[test]
    fn power_product_asymmetric_case() {
        let v = int(28);
        let b = int(28 * 27 * 26);
        assert_eq!(
            cmp_power_products(&v, 5, &b, 4, &Int::TWO, &Int::ONE),
            Ordering::Less
        );
    }

    #[test]
    fn power_product_matches_direct_evaluation_on_random_instances() {
        // Small deterministic LCG; 10^4 instances against direct bigint evaluation.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for _ in 0..10_000 {
            let a = Int::from(next() % 10_000);
            let b = Int::from(next() % 10_000);
            let ea = (next() % 5 + 1) as u32;
            let eb = (next() % 5 + 1) as u32;
            let num = Int::from(next() % 7 + 1);
            let den = Int::from(next() % 7 + 1);
            let direct = (a.to_big().pow(ea) * num.to_big())
                .cmp(&(b.to_big().pow(eb) * den.to_big()));
            assert_eq!(cmp_power_products(&a, ea, &b, eb, &num, &den), direct);
        }
    }

    #[test]
    fn serde_round_trip_as_decimal_string() {
        let v = Int::from(7u64).pow(40);
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.starts_with('"'));
        let back: Int = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
