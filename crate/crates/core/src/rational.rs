//! Exact rational arithmetic over i128.
//!
//! Every rate/relative-distance inequality in this crate is decided on these
//! rationals, never on floats. Magnitudes stay tiny (numerators and
//! denominators are polynomial in q ≤ 31), so i128 with checked operations
//! is exact by a wide margin; an overflow would be a logic error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational {
    num: i128,
    den: i128, // > 0, gcd(|num|, den) = 1
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let (num, den) = (num * sign, den * sign);
        let g = gcd(num, den);
        if g == 0 {
            Rational { num: 0, den: 1 }
        } else {
            Rational { num: num / g, den: den / g }
        }
    }

    pub fn int(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        Rational::int(0)
    }

    pub fn one() -> Self {
        Rational::int(1)
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn checked(v: Option<i128>) -> i128 {
    v.expect("rational arithmetic overflow")
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::new(
            checked(self.num.checked_mul(rhs.den))
                .checked_add(checked(rhs.num.checked_mul(self.den)))
                .expect("rational arithmetic overflow"),
            checked(self.den.checked_mul(rhs.den)),
        )
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::new(
            checked(self.num.checked_mul(rhs.num)),
            checked(self.den.checked_mul(rhs.den)),
        )
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(rhs.num != 0, "division by zero rational");
        Rational::new(
            checked(self.num.checked_mul(rhs.den)),
            checked(self.den.checked_mul(rhs.num)),
        )
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        checked(self.num.checked_mul(other.den)).cmp(&checked(other.num.checked_mul(self.den)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(-2, -4), Rational::new(1, 2));
        assert_eq!(Rational::new(2, -4), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, -7), Rational::zero());
        assert_eq!(Rational::new(6, 25).num(), 6);
        assert_eq!(Rational::new(6, 25).den(), 25);
    }

    #[test]
    fn arithmetic_and_order() {
        let a = Rational::new(6, 25);
        let b = Rational::new(2, 5);
        assert_eq!(a + b, Rational::new(16, 25));
        assert_eq!(b - a, Rational::new(4, 25));
        assert_eq!(a * b, Rational::new(12, 125));
        assert_eq!(a / b, Rational::new(3, 5));
        assert!(b > a);
        assert!((a - b).num() < 0);
        assert_eq!(-a, Rational::new(-6, 25));
    }

    #[test]
    fn display_and_float() {
        assert_eq!(Rational::new(2, 25).to_string(), "2/25");
        assert_eq!(Rational::int(3).to_string(), "3");
        assert!((Rational::new(1, 4).to_f64() - 0.25).abs() < 1e-15);
    }
}
