//! Text form `c0 + c1*x + c2*x^2 + ...` shared by integer and rational polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Writes nonzero terms in ascending degree; `coeffs` are decimal literals.
pub(crate) fn write_poly<I: Iterator<Item = String>>(f: &mut fmt::Formatter<'_>, coeffs: I) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.enumerate() {
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, c),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match k {
            0 => write!(f, "{mag}")?,
            1 => write!(f, "{mag}*x")?,
            _ => write!(f, "{mag}*x^{k}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Parses a sum of terms `[coef][*]var[^k]` into `(coef, k)` pairs.
pub(crate) fn parse_terms(s: &str) -> Result<Vec<(BigRational, usize)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = compact.as_bytes();
    let mut pieces = Vec::new();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            pieces.push(&compact[start..i]);
            start = i;
        }
    }
    pieces.push(&compact[start..]);
    for piece in pieces {
        terms.push(parse_term(piece)?);
    }
    Ok(terms)
}

fn parse_term(piece: &str) -> Result<(BigRational, usize)> {
    let bad = || Error::Parse(format!("bad term {piece:?}"));
    let (sign, body) = match piece.as_bytes().first() {
        Some(b'-') => (-1, &piece[1..]),
        Some(b'+') => (1, &piece[1..]),
        _ => (1, piece),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let var_pos = body.find(|c: char| c.is_alphabetic());
    let (coef_str, var_part) = match var_pos {
        Some(p) => (body[..p].trim_end_matches('*'), Some(&body[p..])),
        None => (body, None),
    };
    let coef = if coef_str.is_empty() {
        BigRational::from(BigInt::from(1))
    } else {
        parse_rational(coef_str)?
    };
    let k = match var_part {
        None => 0,
        Some(v) => {
            let name_end = v.find(|c: char| !c.is_alphanumeric()).unwrap_or(v.len());
            let rest = &v[name_end..];
            if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?
            }
        }
    };
    Ok((coef * BigRational::from(BigInt::from(sign)), k))
}

/// Parses `a`, `a/b`, or a finite decimal `a.b` as an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let digits = format!("{}{}", ip.trim_start_matches(['-', '+']), fp);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let r = BigRational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from(n))
}

/// Exact fraction text `p/q`, or `p` when integral.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational("3.11").unwrap(), BigRational::new(311.into(), 100.into()));
        assert_eq!(parse_rational("-0.5").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("21/4").unwrap(), BigRational::new(21.into(), 4.into()));
    }

    #[test]
    fn terms_with_rational_coefficients() {
        let t = parse_terms("-269/4 - 116*x + x^12").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[2].1, 12);
    }
}
