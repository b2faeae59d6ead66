use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::InversiveError;

/// Exact rational scalar used throughout the geometry layer.
pub type Rat = BigRational;

/// A coordinate row `(b̄, b, bx, by, bz)`.
pub type Vec5 = [Rat; 5];

/// Shorthand for an integer-valued rational.
pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Formats a rational in the external `"num/den"` form (plain `"num"` when
/// the denominator is 1), e.g. `-1/2`, `3`.
pub fn format_rational(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the external `"num/den"` form accepted by [`format_rational`].
pub fn parse_rational(s: &str) -> Result<Rat, InversiveError> {
    let invalid = || InversiveError::JsonInvalid {
        reason: format!("not a rational: {s:?}"),
    };
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .and_then(|p| p.trim().parse().ok())
        .ok_or_else(invalid)?;
    let denom: BigInt = match parts.next() {
        Some(p) => p.trim().parse().map_err(|_| invalid())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(invalid());
    }
    Ok(Rat::new(numer, denom))
}

/// Best-effort `f64` value of an exact rational (used only in the flagged
/// numeric fallback and human-readable summaries).
pub(crate) fn rat_to_f64(x: &Rat) -> f64 {
    // Exact for anything this crate produces; falls back to a quotient of
    // approximations for enormous values.
    let n = x.numer();
    let d = x.denom();
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(nf), Ok(df)) if df != 0.0 => nf / df,
        _ => {
            if x.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_integers_and_fractions() {
        for s in ["0", "7", "-3", "1/2", "-5/8", "355/113"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
        }
    }

    #[test]
    fn parse_normalizes_unreduced_fractions() {
        let x = parse_rational("4/8").unwrap();
        assert_eq!(format_rational(&x), "1/2");
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
