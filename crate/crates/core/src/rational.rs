//! Exact rationals for densities and discharging charges.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision fraction, always normalised with a positive denominator.
pub type Rational = BigRational;

/// `p / q` as a [`Rational`]. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Renders as `"p/q"`, including integral values (`"2/1"`).
pub fn render(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Serde helper writing a [`Rational`] as its `"p/q"` rendering.
pub fn serialize<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&render(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_always_has_denominator() {
        assert_eq!(render(&int(2)), "2/1");
        assert_eq!(render(&ratio(48, 22)), "24/11");
        assert_eq!(render(&ratio(-1, 3)), "-1/3");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("42/19"), Some(ratio(42, 19)));
        assert_eq!(parse(" 5 "), Some(int(5)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn paper_constants_compare_exactly() {
        // 24/11 < 42/19 < 9/4 < 5/2
        assert!(ratio(24, 11) < ratio(42, 19));
        assert!(ratio(42, 19) < ratio(9, 4));
        assert!(ratio(9, 4) < ratio(5, 2));
    }
}
