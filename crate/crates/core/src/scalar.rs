//! Exact scalars and small helpers for vectors of scalars.
//!
//! Every computation in this crate is carried out over the rationals with
//! arbitrary-precision integers, so checks either pass exactly or report an
//! exact nonzero defect. There are no tolerances anywhere.

use std::sync::OnceLock;

use num::{BigInt, BigRational, Signed, Zero};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator (the backing [`BigRational`] maintains both invariants).
pub type Scalar = BigRational;

/// The scalar `n`.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The scalar `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// A shared `1`, for hot loops that would otherwise allocate one per call.
pub fn one_ref() -> &'static Scalar {
    static ONE: OnceLock<Scalar> = OnceLock::new();
    ONE.get_or_init(|| int(1))
}

/// Renders a scalar as `p` (denominator one) or `p/q`.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom() == &BigInt::from(1) {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `p` or `p/q` with `q > 0`; the result is canonicalized to lowest
/// terms. Signs are only accepted on the numerator.
pub fn parse_scalar(text: &str) -> Result<Scalar, String> {
    let parse_int = |part: &str, what: &str| -> Result<BigInt, String> {
        if part.is_empty() {
            return Err(format!("empty {what} in rational {text:?}"));
        }
        part.parse::<BigInt>()
            .map_err(|_| format!("invalid {what} {part:?} in rational {text:?}"))
    };
    match text.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(text, "integer")?)),
        Some((p, q)) => {
            let numer = parse_int(p, "numerator")?;
            let denom = parse_int(q, "denominator")?;
            if !denom.is_positive() {
                return Err(format!("denominator must be positive in rational {text:?}"));
            }
            Ok(Scalar::new(numer, denom))
        }
    }
}

/// A vector of `n` zeros.
pub fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

/// Whether every coordinate is zero.
pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `dst += src`.
pub fn add_assign(dst: &mut [Scalar], src: &[Scalar]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

/// `dst -= src`.
pub fn sub_assign(dst: &mut [Scalar], src: &[Scalar]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= s;
    }
}

/// `dst -= k * src`, skipping zero terms.
pub fn axpy_sub(dst: &mut [Scalar], k: &Scalar, src: &[Scalar]) {
    debug_assert_eq!(dst.len(), src.len());
    if k.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= k * s;
        }
    }
}

/// `dst += k * src`, skipping zero terms.
pub fn axpy(dst: &mut [Scalar], k: &Scalar, src: &[Scalar]) {
    debug_assert_eq!(dst.len(), src.len());
    if k.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += k * s;
        }
    }
}

/// `a - b` as a fresh vector.
pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Renders a vector as `[a, b, ...]` using [`format_scalar`].
pub fn format_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-3").unwrap(), int(-3));
        assert_eq!(parse_scalar("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
    }

    #[test]
    fn parse_rejects_nonpositive_denominators() {
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1/-2").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1/").is_err());
        assert!(parse_scalar("a/2").is_err());
    }

    #[test]
    fn format_round_trips_lowest_terms() {
        assert_eq!(format_scalar(&frac(3, 2)), "3/2");
        assert_eq!(format_scalar(&int(-7)), "-7");
        assert_eq!(format_scalar(&frac(4, 2)), "2");
    }
}
