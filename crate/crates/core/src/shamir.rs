//! Shamir's (t, n) threshold sharing, vector form.
//!
//! Each symbol position of the secret is an independent scalar instance:
//! `f(x) = S + R_1 x + ... + R_{t-1} x^{t-1}` with uniform `R_j` of the
//! secret's width, and share `i` is `f(alpha_i)`. Shares are exactly as long
//! as the secret.

use rand::RngCore;

use crate::census::{polynomial_census, LeakageCensus};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::params::{select_threshold, validate_threshold};
use crate::poly::{SymbolVector, VectorPolynomial};
use crate::share::{common_header, header_u32, SchemeId, Share, ShareHeader};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShamirShare {
    pub index: usize,
    pub value: SymbolVector,
}

pub fn shamir_share(
    secret: &SymbolVector,
    t: usize,
    n: usize,
    rng: &mut dyn RngCore,
) -> Result<Vec<ShamirShare>> {
    let field = secret.field();
    validate_threshold(t, n, field)?;
    let mut coefficients = Vec::with_capacity(t);
    coefficients.push(secret.clone());
    for _ in 1..t {
        coefficients.push(SymbolVector::random(field, secret.len(), rng)?);
    }
    let poly = VectorPolynomial::new(coefficients)?;
    (1..=n)
        .map(|index| {
            Ok(ShamirShare {
                index,
                value: poly.eval(FieldElement::from_index(index, field)?)?,
            })
        })
        .collect()
}

/// `f(0)` from the first `t` of at least `t` shares.
pub fn shamir_reconstruct(shares: &[ShamirShare], t: usize) -> Result<SymbolVector> {
    let indices: Vec<usize> = shares.iter().map(|s| s.index).collect();
    let chosen = select_threshold(&indices, t)?;
    let field = shares[0].value.field();
    let points = chosen
        .into_iter()
        .map(|k| {
            let s = &shares[k];
            Ok((FieldElement::from_index(s.index, field)?, s.value.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    VectorPolynomial::interpolate_constant(&points)
}

/// Exhaustive census of a scalar `(t, n)` instance: for every `(t-1)`-subset
/// and every secret, the distribution of what the subset sees. Perfect
/// security holds iff [`LeakageCensus::is_perfect`].
pub fn shamir_leakage_census(t: usize, n: usize, field: Field) -> Result<LeakageCensus> {
    polynomial_census(field, t, n)
}

/// Shares a byte string. Shamir needs no cipher; the header's suite is `None`.
pub fn split(secret: &[u8], t: usize, n: usize, field: Field, rng: &mut dyn RngCore) -> Result<Vec<Share>> {
    validate_threshold(t, n, field)?;
    let symbols = SymbolVector::from_bytes(field, secret);
    let header = ShareHeader {
        scheme: SchemeId::Shamir,
        field,
        suite: None,
        t: t as u8,
        n: n as u8,
        index: 0,
        nonce: [0; 16],
        orig_len: secret.len() as u64,
        plain_pad: 0,
        tail_pad: 0,
        poly_part_len: header_u32(symbols.len(), "secret length")?,
        frag_part_len: 0,
    };
    Ok(shamir_share(&symbols, t, n, rng)?
        .into_iter()
        .map(|s| Share {
            header: ShareHeader {
                index: s.index as u8,
                ..header
            },
            poly_part: s.value,
            frag_part: SymbolVector::zeros(field, 0),
        })
        .collect())
}

pub fn reconstruct(shares: &[Share]) -> Result<Vec<u8>> {
    let header = common_header(shares)?;
    if header.scheme != SchemeId::Shamir {
        return Err(Error::IncompatibleShares(format!("expected shamir shares, got {}", header.scheme)));
    }
    let t = header.threshold();
    let expected = header.orig_len as usize * 8 / header.field.bits() as usize;
    if header.poly_part_len as usize != expected {
        return Err(Error::IncompatibleShares("share length does not match secret length".into()));
    }
    let inner: Vec<ShamirShare> = shares
        .iter()
        .map(|s| ShamirShare {
            index: s.index(),
            value: s.poly_part.clone(),
        })
        .collect();
    let secret = shamir_reconstruct(&inner, t)?;
    Ok(secret.to_bytes())
}
