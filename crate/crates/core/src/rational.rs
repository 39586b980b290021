//! Exact rationals for cut quantities.
//!
//! Densities and relative cut sizes are ratios of small integers, so `i64`
//! numerators and denominators are plenty for every graph the exact routines
//! accept.

use num_traits::ToPrimitive;
use serde::Serialize;

/// Always in lowest terms with a positive denominator.
pub type Rational = num_rational::Ratio<i64>;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Serialized form of a rational: `"p/q"` plus a float approximation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RationalValue {
    pub value: String,
    pub float: f64,
}

impl From<Rational> for RationalValue {
    fn from(r: Rational) -> Self {
        RationalValue {
            value: r.to_string(),
            float: to_f64(&r),
        }
    }
}

impl From<&Rational> for RationalValue {
    fn from(r: &Rational) -> Self {
        RationalValue::from(*r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = ratio(10, -42);
        assert_eq!(*r.numer(), -5);
        assert_eq!(*r.denom(), 21);
    }

    #[test]
    fn serialized_form() {
        let v = RationalValue::from(ratio(5, 12));
        assert_eq!(v.value, "5/12");
        assert!((v.float - 5.0 / 12.0).abs() < 1e-15);
        assert_eq!(RationalValue::from(ratio(4, 4)).value, "1");
    }
}
