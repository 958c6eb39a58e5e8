//! Share container and its on-disk encoding.
//!
//! Layout (all integers little-endian, fixed width):
//!
//! | offset | size | field                                   |
//! |-------:|-----:|-----------------------------------------|
//! | 0      | 4    | magic `PET1`                            |
//! | 4      | 1    | version (`1`)                           |
//! | 5      | 1    | scheme id                               |
//! | 6      | 1    | field id                                |
//! | 7      | 1    | cipher id (`0` for Shamir, no cipher)   |
//! | 8      | 1    | t                                       |
//! | 9      | 1    | n                                       |
//! | 10     | 1    | index                                   |
//! | 11     | 16   | nonce, reserved, zero in version 1      |
//! | 27     | 8    | orig_len (secret bytes)                 |
//! | 35     | 4    | plain_pad (symbols)                     |
//! | 39     | 4    | tail_pad (symbols)                      |
//! | 43     | 4    | poly_part_len (symbols)                 |
//! | 47     | 4    | frag_part_len (symbols)                 |
//! | 51     | ..   | payload: packed symbols, poly then frag |
//!
//! The payload is the concatenation of both parts packed under the field's
//! rule, so its byte length is `ceil((poly + frag) * m / 8)`.

use std::fmt;
use std::str::FromStr;

use crate::cipher::CipherSuite;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::SymbolVector;

pub const MAGIC: [u8; 4] = *b"PET1";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 51;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchemeId {
    Shamir,
    Ssms,
    Pets,
}

impl SchemeId {
    pub const ALL: [SchemeId; 3] = [SchemeId::Shamir, SchemeId::Ssms, SchemeId::Pets];

    pub const fn id(self) -> u8 {
        match self {
            SchemeId::Shamir => 0x01,
            SchemeId::Ssms => 0x02,
            SchemeId::Pets => 0x03,
        }
    }

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            0x01 => Ok(SchemeId::Shamir),
            0x02 => Ok(SchemeId::Ssms),
            0x03 => Ok(SchemeId::Pets),
            other => Err(Error::UnknownScheme(other)),
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            SchemeId::Shamir => "shamir",
            SchemeId::Ssms => "ssms",
            SchemeId::Pets => "pets",
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchemeId::ALL
            .into_iter()
            .find(|scheme| scheme.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown scheme `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShareHeader {
    pub scheme: SchemeId,
    pub field: Field,
    /// `None` only for Shamir shares.
    pub suite: Option<CipherSuite>,
    pub t: u8,
    pub n: u8,
    pub index: u8,
    pub nonce: [u8; 16],
    pub orig_len: u64,
    pub plain_pad: u32,
    pub tail_pad: u32,
    pub poly_part_len: u32,
    pub frag_part_len: u32,
}

impl ShareHeader {
    pub fn threshold(&self) -> usize {
        usize::from(self.t)
    }

    pub fn participants(&self) -> usize {
        usize::from(self.n)
    }

    /// Payload symbols carried by the share.
    pub fn payload_symbols(&self) -> usize {
        self.poly_part_len as usize + self.frag_part_len as usize
    }

    pub fn payload_bytes(&self) -> usize {
        self.field.packed_len(self.payload_symbols())
    }

    /// Equal in every field except the participant index.
    pub fn same_sharing(&self, other: &ShareHeader) -> bool {
        ShareHeader {
            index: other.index,
            ..*self
        } == *other
    }

    fn validate(&self) -> Result<()> {
        if self.t == 0 || self.t > self.n {
            return Err(Error::Malformed(format!("threshold {} of {}", self.t, self.n)));
        }
        if self.index == 0 || self.index > self.n {
            return Err(Error::Malformed(format!("index {} outside 1..={}", self.index, self.n)));
        }
        if usize::from(self.n) > self.field.max_participants() {
            return Err(Error::Malformed(format!("n={} exceeds {} capacity", self.n, self.field)));
        }
        match (self.scheme, self.suite) {
            (SchemeId::Shamir, None) | (SchemeId::Ssms | SchemeId::Pets, Some(_)) => Ok(()),
            (scheme, _) => Err(Error::Malformed(format!("cipher id does not fit scheme {scheme}"))),
        }
    }
}

/// One participant's share: the polynomial-evaluation part and the dispersal
/// part (empty for Shamir).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Share {
    pub header: ShareHeader,
    pub poly_part: SymbolVector,
    pub frag_part: SymbolVector,
}

impl Share {
    pub fn index(&self) -> usize {
        usize::from(self.header.index)
    }

    pub fn payload_symbols(&self) -> usize {
        self.poly_part.len() + self.frag_part.len()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let h = &self.header;
        let mut out = Vec::with_capacity(HEADER_LEN + h.payload_bytes());
        out.extend_from_slice(&MAGIC);
        out.push(VERSION);
        out.push(h.scheme.id());
        out.push(h.field.id());
        out.push(h.suite.map_or(0, CipherSuite::id));
        out.extend_from_slice(&[h.t, h.n, h.index]);
        out.extend_from_slice(&h.nonce);
        out.extend_from_slice(&h.orig_len.to_le_bytes());
        for v in [h.plain_pad, h.tail_pad, h.poly_part_len, h.frag_part_len] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        let mut symbols = self.poly_part.symbols().to_vec();
        symbols.extend_from_slice(self.frag_part.symbols());
        out.extend_from_slice(&h.field.pack(&symbols));
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Share> {
        if bytes.len() < 5 {
            return Err(Error::Malformed(format!("{} bytes is too short", bytes.len())));
        }
        if bytes[..4] != MAGIC {
            return Err(Error::BadMagic);
        }
        if bytes[4] != VERSION {
            return Err(Error::UnsupportedVersion(bytes[4]));
        }
        if bytes.len() < HEADER_LEN {
            return Err(Error::Malformed(format!("truncated header ({} bytes)", bytes.len())));
        }
        let u32_at = |at: usize| u32::from_le_bytes(bytes[at..at + 4].try_into().expect("4 bytes"));
        let field = Field::from_id(bytes[6])?;
        let suite = match bytes[7] {
            0 => None,
            id => Some(CipherSuite::from_id(id)?),
        };
        let header = ShareHeader {
            scheme: SchemeId::from_id(bytes[5])?,
            field,
            suite,
            t: bytes[8],
            n: bytes[9],
            index: bytes[10],
            nonce: bytes[11..27].try_into().expect("16 bytes"),
            orig_len: u64::from_le_bytes(bytes[27..35].try_into().expect("8 bytes")),
            plain_pad: u32_at(35),
            tail_pad: u32_at(39),
            poly_part_len: u32_at(43),
            frag_part_len: u32_at(47),
        };
        header.validate()?;
        let payload = &bytes[HEADER_LEN..];
        if payload.len() != header.payload_bytes() {
            return Err(Error::Malformed(format!(
                "payload is {} bytes, header implies {}",
                payload.len(),
                header.payload_bytes()
            )));
        }
        let mut symbols = field.unpack(payload);
        symbols.truncate(header.payload_symbols());
        let frag = symbols.split_off(header.poly_part_len as usize);
        Ok(Share {
            header,
            poly_part: SymbolVector::new(field, symbols)?,
            frag_part: SymbolVector::new(field, frag)?,
        })
    }
}

/// Checks that `shares` come from one sharing and carry the lengths their
/// headers declare. Returns the common header (of the first share).
pub fn common_header(shares: &[Share]) -> Result<ShareHeader> {
    let first = shares.first().ok_or(Error::InsufficientShares { required: 1, got: 0 })?;
    for share in shares {
        let h = &share.header;
        if !first.header.same_sharing(h) {
            return Err(Error::IncompatibleShares(format!(
                "share {} disagrees with share {} on sharing parameters",
                h.index, first.header.index
            )));
        }
        if share.poly_part.len() != h.poly_part_len as usize
            || share.frag_part.len() != h.frag_part_len as usize
            || share.poly_part.field() != h.field
            || share.frag_part.field() != h.field
        {
            return Err(Error::IncompatibleShares(format!(
                "share {} payload does not match its header",
                h.index
            )));
        }
    }
    Ok(first.header)
}

/// Converts a count to the `u32` a header field holds.
pub(crate) fn header_u32(value: usize, what: &str) -> Result<u32> {
    u32::try_from(value).map_err(|_| Error::InvalidParameters(format!("{what} {value} exceeds header range")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample(field: Field, poly: Vec<u8>, frag: Vec<u8>) -> Share {
        Share {
            header: ShareHeader {
                scheme: SchemeId::Pets,
                field,
                suite: Some(CipherSuite::TestKeystream),
                t: 2,
                n: 3,
                index: 1,
                nonce: [0; 16],
                orig_len: 7,
                plain_pad: 1,
                tail_pad: 1,
                poly_part_len: poly.len() as u32,
                frag_part_len: frag.len() as u32,
            },
            poly_part: SymbolVector::new(field, poly).unwrap(),
            frag_part: SymbolVector::new(field, frag).unwrap(),
        }
    }

    #[test]
    fn header_layout() {
        let share = sample(Field::Gf4, vec![1, 2, 3], vec![3, 0]);
        let bytes = share.to_bytes();
        assert_eq!(&bytes[..4], b"PET1");
        assert_eq!(bytes[4..11], [1, 3, 1, 2, 2, 3, 1]);
        assert_eq!(bytes[27..35], 7u64.to_le_bytes());
        assert_eq!(bytes.len(), HEADER_LEN + 2);
        assert_eq!(bytes[HEADER_LEN..], [0b01_10_11_11, 0]);
        assert_eq!(Share::from_bytes(&bytes).unwrap(), share);
    }

    #[test]
    fn rejects_bad_files() {
        let bytes = sample(Field::Gf256, vec![1, 2], vec![3]).to_bytes();
        let mut bad = bytes.clone();
        bad[0] = b'X';
        assert!(matches!(Share::from_bytes(&bad), Err(Error::BadMagic)));
        let mut bad = bytes.clone();
        bad[4] = 2;
        assert!(matches!(Share::from_bytes(&bad), Err(Error::UnsupportedVersion(2))));
        assert!(matches!(Share::from_bytes(&bytes[..20]), Err(Error::Malformed(_))));
        assert!(matches!(Share::from_bytes(&bytes[..bytes.len() - 1]), Err(Error::Malformed(_))));
        let mut bad = bytes.clone();
        bad[10] = 4;
        assert!(Share::from_bytes(&bad).is_err());
        let mut bad = bytes;
        bad[7] = 0;
        assert!(Share::from_bytes(&bad).is_err());
    }

    #[test]
    fn consistency() {
        let a = sample(Field::Gf256, vec![1, 2], vec![3]);
        let mut b = a.clone();
        b.header.index = 2;
        assert!(common_header(&[a.clone(), b.clone()]).is_ok());
        b.header.orig_len = 8;
        assert!(matches!(common_header(&[a.clone(), b]), Err(Error::IncompatibleShares(_))));
        let mut c = a.clone();
        c.frag_part = SymbolVector::zeros(Field::Gf256, 4);
        assert!(common_header(&[a, c]).is_err());
        assert!(matches!(common_header(&[]), Err(Error::InsufficientShares { .. })));
    }

    proptest! {
        #[test]
        fn encoding_round_trips(
            gf4 in any::<bool>(),
            poly in proptest::collection::vec(any::<u8>(), 0..40),
            frag in proptest::collection::vec(any::<u8>(), 0..40),
        ) {
            let field = if gf4 { Field::Gf4 } else { Field::Gf256 };
            let mask = (field.order() - 1) as u8;
            let share = sample(
                field,
                poly.into_iter().map(|s| s & mask).collect(),
                frag.into_iter().map(|s| s & mask).collect(),
            );
            let bytes = share.to_bytes();
            prop_assert_eq!(bytes.len(), HEADER_LEN + share.header.payload_bytes());
            prop_assert_eq!(Share::from_bytes(&bytes).unwrap(), share);
        }
    }
}
