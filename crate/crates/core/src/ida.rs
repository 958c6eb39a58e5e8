//! Reed-Solomon information dispersal.
//!
//! The message is zero-padded to a multiple of `t`, cut row-major into `t`
//! chunks of `L = ceil(|M| / t)` symbols, and the chunks become the
//! coefficients of a vector polynomial. Fragment `i` is that polynomial at the
//! canonical point `alpha_i`. Any `t` fragments interpolate the chunks back.
//! Dispersal gives no secrecy; it only moves data.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::params::{select_threshold, validate_threshold};
use crate::poly::{SymbolVector, VectorPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragment {
    /// Participant index in `[1, n]`.
    pub index: usize,
    pub data: SymbolVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dispersal {
    pub fragments: Vec<Fragment>,
    /// Zero symbols appended before chunking.
    pub pad_len: usize,
}

/// Fragment length and padding for a message of `len` symbols.
pub fn fragment_geometry(len: usize, t: usize) -> (usize, usize) {
    let frag_len = len.div_ceil(t);
    (frag_len, frag_len * t - len)
}

pub fn disperse(message: &SymbolVector, t: usize, n: usize) -> Result<Dispersal> {
    let field = message.field();
    validate_threshold(t, n, field)?;
    let (frag_len, pad_len) = fragment_geometry(message.len(), t);
    let mut padded = message.clone();
    padded.resize(frag_len * t);
    let chunks = (0..t)
        .map(|j| padded.slice(j * frag_len, (j + 1) * frag_len))
        .collect();
    let poly = VectorPolynomial::new(chunks)?;
    let fragments = (1..=n)
        .map(|index| {
            let x = FieldElement::from_index(index, field)?;
            Ok(Fragment {
                index,
                data: poly.eval(x)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Dispersal { fragments, pad_len })
}

/// Rebuilds the message from at least `t` fragments; only the first `t` are used.
pub fn reconstruct(fragments: &[Fragment], t: usize, pad_len: usize) -> Result<SymbolVector> {
    let indices: Vec<usize> = fragments.iter().map(|f| f.index).collect();
    let chosen = select_threshold(&indices, t)?;
    let field = fragments[0].data.field();
    let frag_len = fragments[0].data.len();
    if pad_len > frag_len * t || (frag_len > 0 && pad_len >= t) {
        return Err(Error::InvalidParameters(format!(
            "pad length {pad_len} inconsistent with {t} chunks of {frag_len} symbols"
        )));
    }
    let points = chosen
        .into_iter()
        .map(|k| {
            let f = &fragments[k];
            Ok((FieldElement::from_index(f.index, field)?, f.data.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = VectorPolynomial::interpolate(&points)?;
    let mut message = SymbolVector::concat(field, poly.coefficients())?;
    message.truncate(frag_len * t - pad_len);
    Ok(message)
}

/// Exhaustive census over every message of `msg_len` symbols: for each
/// `(t-1)`-subset of fragment indices and each value those fragments can
/// take, counts how many messages produce it. Returns the smallest count seen.
///
/// A result of at least `q` means no sub-threshold view pins the message down.
pub fn min_consistent_messages(field: Field, t: usize, n: usize, msg_len: usize) -> Result<u64> {
    validate_threshold(t, n, field)?;
    const LIMIT: u128 = 1 << 20;
    let space = u128::from(field.order()).pow(msg_len as u32);
    if space > LIMIT {
        return Err(Error::SpaceTooLarge { size: space, limit: LIMIT });
    }
    let q = u64::from(field.order());
    let mut dispersals = Vec::with_capacity(space as usize);
    for code in 0..space as u64 {
        let symbols = (0..msg_len)
            .map(|k| (code / q.pow(k as u32) % q) as u8)
            .collect();
        dispersals.push(disperse(&SymbolVector::new(field, symbols)?, t, n)?);
    }
    let mut min = u64::MAX;
    for subset in (0..n).combinations(t - 1) {
        let mut counts = std::collections::HashMap::<Vec<u8>, u64>::new();
        for d in &dispersals {
            let view: Vec<u8> = subset
                .iter()
                .flat_map(|&k| d.fragments[k].data.symbols().to_vec())
                .collect();
            *counts.entry(view).or_default() += 1;
        }
        min = min.min(counts.values().copied().min().unwrap_or(0));
    }
    Ok(min)
}
