//! The short-share baseline ("secret sharing made short").
//!
//! Encrypt the secret, Shamir-share the key, and disperse the whole
//! ciphertext. Each share carries `|K| + ceil(|S| / t)` symbols.

use rand::RngCore;

use crate::census::LeakageCensus;
use crate::cipher::{Cipher, CipherSuite, SecretKey};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::ida::{self, fragment_geometry, Fragment};
use crate::params::validate_threshold;
use crate::poly::SymbolVector;
use crate::shamir::{self, ShamirShare};
use crate::share::{common_header, header_u32, SchemeId, Share, ShareHeader};

/// Symbol accounting for one SSMS sharing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SsmsGeometry {
    pub t: usize,
    pub n: usize,
    pub sym_s: usize,
    pub sym_k: usize,
    /// Dispersal fragment length, `ceil(sym_s / t)`.
    pub frag_len: usize,
    pub tail_pad: usize,
}

impl SsmsGeometry {
    pub fn from_symbols(sym_s: usize, sym_k: usize, t: usize, n: usize) -> Result<Self> {
        if t == 0 || t > n {
            return Err(Error::InvalidParameters(format!("invalid threshold ({t},{n})")));
        }
        let (frag_len, tail_pad) = fragment_geometry(sym_s, t);
        Ok(SsmsGeometry {
            t,
            n,
            sym_s,
            sym_k,
            frag_len,
            tail_pad,
        })
    }

    pub fn plan(secret_len: usize, t: usize, n: usize, suite: CipherSuite, field: Field) -> Result<Self> {
        validate_threshold(t, n, field)?;
        let per_byte = field.symbols_per_byte();
        Self::from_symbols(secret_len * per_byte, suite.key_len() * per_byte, t, n)
    }

    /// Symbols per share.
    pub fn payload(&self) -> usize {
        self.sym_k + self.frag_len
    }
}

pub fn ssms_split(
    secret: &[u8],
    t: usize,
    n: usize,
    suite: CipherSuite,
    field: Field,
    rng: &mut dyn RngCore,
) -> Result<Vec<Share>> {
    let geometry = SsmsGeometry::plan(secret.len(), t, n, suite, field)?;
    let key = suite.keygen(rng)?;
    let ciphertext = SymbolVector::from_bytes(field, &suite.encrypt(&key, secret));
    let key_shares = shamir::shamir_share(&key.to_symbols(field), t, n, rng)?;
    let dispersal = ida::disperse(&ciphertext, t, n)?;
    debug_assert_eq!(dispersal.pad_len, geometry.tail_pad);
    let header = ShareHeader {
        scheme: SchemeId::Ssms,
        field,
        suite: Some(suite),
        t: t as u8,
        n: n as u8,
        index: 0,
        nonce: [0; 16],
        orig_len: secret.len() as u64,
        plain_pad: 0,
        tail_pad: header_u32(geometry.tail_pad, "tail padding")?,
        poly_part_len: header_u32(geometry.sym_k, "key length")?,
        frag_part_len: header_u32(geometry.frag_len, "fragment length")?,
    };
    Ok(key_shares
        .into_iter()
        .zip(dispersal.fragments)
        .map(|(key_share, fragment)| Share {
            header: ShareHeader {
                index: key_share.index as u8,
                ..header
            },
            poly_part: key_share.value,
            frag_part: fragment.data,
        })
        .collect())
}

pub fn ssms_reconstruct(shares: &[Share]) -> Result<Vec<u8>> {
    let header = common_header(shares)?;
    let suite = match (header.scheme, header.suite) {
        (SchemeId::Ssms, Some(suite)) => suite,
        _ => {
            return Err(Error::IncompatibleShares(format!(
                "expected ssms shares, got {}",
                header.scheme
            )))
        }
    };
    let (t, n) = (header.threshold(), header.participants());
    let geometry = SsmsGeometry::plan(header.orig_len as usize, t, n, suite, header.field)?;
    if header.poly_part_len as usize != geometry.sym_k
        || header.frag_part_len as usize != geometry.frag_len
        || header.tail_pad as usize != geometry.tail_pad
        || header.plain_pad != 0
    {
        return Err(Error::IncompatibleShares("header lengths disagree with the sharing geometry".into()));
    }
    let key_shares: Vec<ShamirShare> = shares
        .iter()
        .map(|s| ShamirShare {
            index: s.index(),
            value: s.poly_part.clone(),
        })
        .collect();
    let fragments: Vec<Fragment> = shares
        .iter()
        .map(|s| Fragment {
            index: s.index(),
            data: s.frag_part.clone(),
        })
        .collect();
    let key = SecretKey::from_symbols(&shamir::shamir_reconstruct(&key_shares, t)?);
    let ciphertext = ida::reconstruct(&fragments, t, geometry.tail_pad)?;
    suite.decrypt(&key, &ciphertext.to_bytes())
}

/// The key part is a plain Shamir polynomial, so its census is Shamir's.
pub fn key_part_census(t: usize, n: usize, field: Field) -> Result<LeakageCensus> {
    shamir::shamir_leakage_census(t, n, field)
}
