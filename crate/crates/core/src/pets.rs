//! Pseudorandom-encryption threshold sharing.
//!
//! The dealer encrypts the secret under a fresh key `K` and cuts the
//! ciphertext into `t - 1` key-sized blocks `E_1 .. E_{t-1}` plus a tail
//! `E_t`. The key and the blocks form one vector polynomial
//!
//! ```text
//! f(x) = K + E_1 x + ... + E_{t-1} x^{t-1}
//! ```
//!
//! and the tail goes through Reed-Solomon dispersal. Share `i` is
//! `(f(alpha_i), X_i)`, `|K| + ceil(|E_t| / t)` symbols, which is
//! `(|S| + |K|) / t` whenever `t` divides `|S| + |K|`.
//!
//! Secrets shorter than `(t - 1) |K|` symbols are zero-padded before
//! encryption so every block is ciphertext. The key is the only randomness.

use rand::RngCore;

use crate::census::{polynomial_census, LeakageCensus};
use crate::cipher::{Cipher, CipherSuite, SecretKey};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::ida::{self, fragment_geometry, Fragment};
use crate::params::{select_threshold, validate_threshold};
use crate::poly::{SymbolVector, VectorPolynomial};
use crate::share::{common_header, header_u32, SchemeId, Share, ShareHeader};

/// Symbol accounting for one PETS sharing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PetsGeometry {
    pub t: usize,
    pub n: usize,
    /// Secret length in symbols before plaintext padding.
    pub orig_sym: usize,
    /// Secret length in symbols after plaintext padding.
    pub sym_s: usize,
    pub sym_k: usize,
    /// Number of key-sized ciphertext blocks in the polynomial, `t - 1`.
    pub head_blocks: usize,
    /// Symbols left for dispersal, `sym_s - (t - 1) sym_k`.
    pub tail_len: usize,
    pub frag_len: usize,
    pub plain_pad: usize,
    pub tail_pad: usize,
}

impl PetsGeometry {
    /// Pure symbol accounting. The padded secret length is
    /// `max(orig_sym, (t - 1) sym_k)`.
    pub fn from_symbols(orig_sym: usize, sym_k: usize, t: usize, n: usize) -> Result<Self> {
        if t == 0 || t > n {
            return Err(Error::InvalidParameters(format!("invalid threshold ({t},{n})")));
        }
        let head = (t - 1) * sym_k;
        let sym_s = orig_sym.max(head);
        let tail_len = sym_s - head;
        let (frag_len, tail_pad) = fragment_geometry(tail_len, t);
        Ok(PetsGeometry {
            t,
            n,
            orig_sym,
            sym_s,
            sym_k,
            head_blocks: t - 1,
            tail_len,
            frag_len,
            plain_pad: sym_s - orig_sym,
            tail_pad,
        })
    }

    /// Symbols per share: the polynomial part plus one fragment.
    pub fn payload(&self) -> usize {
        self.sym_k + self.frag_len
    }

    /// No plaintext or tail padding was needed.
    pub fn is_pad_free(&self) -> bool {
        self.plain_pad == 0 && self.tail_pad == 0
    }
}

/// Geometry for sharing `secret_len` bytes under `suite` over `field`.
pub fn pets_plan(
    secret_len: usize,
    t: usize,
    n: usize,
    suite: CipherSuite,
    field: Field,
) -> Result<PetsGeometry> {
    validate_threshold(t, n, field)?;
    let per_byte = field.symbols_per_byte();
    PetsGeometry::from_symbols(secret_len * per_byte, suite.key_len() * per_byte, t, n)
}

pub fn pets_split(
    secret: &[u8],
    t: usize,
    n: usize,
    suite: CipherSuite,
    field: Field,
    rng: &mut dyn RngCore,
) -> Result<Vec<Share>> {
    let g = pets_plan(secret.len(), t, n, suite, field)?;
    let key = suite.keygen(rng)?;

    // plain_pad is a whole number of bytes: both bounds are byte multiples
    let mut padded = secret.to_vec();
    padded.resize(secret.len() + g.plain_pad / field.symbols_per_byte(), 0);
    let ciphertext = SymbolVector::from_bytes(field, &suite.encrypt(&key, &padded));
    debug_assert_eq!(ciphertext.len(), g.sym_s);

    let mut coefficients = Vec::with_capacity(t);
    coefficients.push(key.to_symbols(field));
    for j in 0..g.head_blocks {
        coefficients.push(ciphertext.slice(j * g.sym_k, (j + 1) * g.sym_k));
    }
    let poly = VectorPolynomial::new(coefficients)?;
    let tail = ciphertext.slice(g.head_blocks * g.sym_k, g.sym_s);
    let dispersal = ida::disperse(&tail, t, n)?;
    debug_assert_eq!(dispersal.pad_len, g.tail_pad);

    let header = ShareHeader {
        scheme: SchemeId::Pets,
        field,
        suite: Some(suite),
        t: t as u8,
        n: n as u8,
        index: 0,
        nonce: [0; 16],
        orig_len: secret.len() as u64,
        plain_pad: header_u32(g.plain_pad, "plaintext padding")?,
        tail_pad: header_u32(g.tail_pad, "tail padding")?,
        poly_part_len: header_u32(g.sym_k, "key length")?,
        frag_part_len: header_u32(g.frag_len, "fragment length")?,
    };
    dispersal
        .fragments
        .into_iter()
        .map(|fragment| {
            let x = FieldElement::from_index(fragment.index, field)?;
            Ok(Share {
                header: ShareHeader {
                    index: fragment.index as u8,
                    ..header
                },
                poly_part: poly.eval(x)?,
                frag_part: fragment.data,
            })
        })
        .collect()
}

pub fn pets_reconstruct(shares: &[Share]) -> Result<Vec<u8>> {
    let header = common_header(shares)?;
    let suite = match (header.scheme, header.suite) {
        (SchemeId::Pets, Some(suite)) => suite,
        _ => {
            return Err(Error::IncompatibleShares(format!(
                "expected pets shares, got {}",
                header.scheme
            )))
        }
    };
    let field = header.field;
    let (t, n) = (header.threshold(), header.participants());
    let g = pets_plan(header.orig_len as usize, t, n, suite, field)?;
    if header.poly_part_len as usize != g.sym_k
        || header.frag_part_len as usize != g.frag_len
        || header.plain_pad as usize != g.plain_pad
        || header.tail_pad as usize != g.tail_pad
    {
        return Err(Error::IncompatibleShares("header lengths disagree with the sharing geometry".into()));
    }

    let indices: Vec<usize> = shares.iter().map(Share::index).collect();
    let chosen = select_threshold(&indices, t)?;
    let points = chosen
        .iter()
        .map(|&k| {
            let s = &shares[k];
            Ok((FieldElement::from_index(s.index(), field)?, s.poly_part.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut blocks = VectorPolynomial::interpolate(&points)?.into_coefficients();
    let key = SecretKey::from_symbols(&blocks.remove(0));

    let fragments: Vec<Fragment> = chosen
        .iter()
        .map(|&k| Fragment {
            index: shares[k].index(),
            data: shares[k].frag_part.clone(),
        })
        .collect();
    blocks.push(ida::reconstruct(&fragments, t, g.tail_pad)?);

    let ciphertext = SymbolVector::concat(field, &blocks)?;
    let mut plaintext = suite.decrypt(&key, &ciphertext.to_bytes())?;
    plaintext.truncate(header.orig_len as usize);
    Ok(plaintext)
}

/// Ideal-cipher census at toy scale: `K` is one symbol and the head blocks are
/// enumerated over every value. True iff, for every fixed `K`, every
/// `(t-1)`-subset sees each tuple of `F^{t-1}` exactly once.
pub fn pets_uniformity_census(t: usize, n: usize, field: Field) -> Result<bool> {
    Ok(uniformity_census_table(t, n, field)?.is_uniform())
}

/// The full table behind [`pets_uniformity_census`].
pub fn uniformity_census_table(t: usize, n: usize, field: Field) -> Result<LeakageCensus> {
    polynomial_census(field, t, n)
}
