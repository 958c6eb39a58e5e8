//! Arithmetic in the binary extension fields GF(4) and GF(256).
//!
//! Field elements are carried as `u8` values in `[0, q)`; addition is XOR and
//! multiplication is carry-less multiplication reduced by the field's
//! irreducible polynomial. GF(4) uses `x^2 + x + 1` (so `alpha^2 = alpha + 1`,
//! with `alpha` encoded as `2`), GF(256) uses `x^8 + x^4 + x^3 + x + 1`.
//!
//! GF(256) multiplication goes through a 64 KiB product table built once from
//! [`Field::mul_reference`]; the reference path stays public so tests can
//! compare the two.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A supported binary extension field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// GF(2^2), reduction polynomial x^2 + x + 1.
    Gf4,
    /// GF(2^8), reduction polynomial x^8 + x^4 + x^3 + x + 1.
    Gf256,
}

/// Alias used where the field is read as a parameter set rather than a value domain.
pub type FieldSpec = Field;

impl Field {
    pub const ALL: [Field; 2] = [Field::Gf4, Field::Gf256];

    /// Bits per symbol.
    pub const fn bits(self) -> u32 {
        match self {
            Field::Gf4 => 2,
            Field::Gf256 => 8,
        }
    }

    /// Integer encoding of the irreducible polynomial, including the leading term.
    pub const fn reduction_poly(self) -> u16 {
        match self {
            Field::Gf4 => 0b111,
            Field::Gf256 => 0x11b,
        }
    }

    /// Field order q = 2^m.
    pub const fn order(self) -> u16 {
        1 << self.bits()
    }

    /// Symbols packed into one byte.
    pub const fn symbols_per_byte(self) -> usize {
        8 / self.bits() as usize
    }

    /// Largest number of participants the field can serve (q - 1 nonzero points).
    pub const fn max_participants(self) -> usize {
        self.order() as usize - 1
    }

    /// One-byte identifier used in share headers.
    pub const fn id(self) -> u8 {
        match self {
            Field::Gf4 => 0x01,
            Field::Gf256 => 0x02,
        }
    }

    pub fn from_id(id: u8) -> Result<Field> {
        match id {
            0x01 => Ok(Field::Gf4),
            0x02 => Ok(Field::Gf256),
            other => Err(Error::UnknownField(other)),
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Field::Gf4 => "gf4",
            Field::Gf256 => "gf256",
        }
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        debug_assert!(u16::from(a) < self.order() && u16::from(b) < self.order());
        a ^ b
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self {
            Field::Gf4 => GF4_MUL[usize::from(a & 3)][usize::from(b & 3)],
            Field::Gf256 => gf256_table()[usize::from(a) << 8 | usize::from(b)],
        }
    }

    /// Shift-and-add multiplication with reduction after each shift. This is the
    /// ground truth the lookup tables are built from.
    pub fn mul_reference(self, a: u8, b: u8) -> u8 {
        let m = self.bits();
        let poly = self.reduction_poly();
        let top = 1u16 << m;
        let mut a = u16::from(a);
        let mut b = u16::from(b);
        let mut acc = 0u16;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= poly;
            }
        }
        acc as u8
    }

    /// Multiplicative inverse via a^(q-2).
    pub fn inv(self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut exp = self.order() - 2;
        let mut base = a;
        let mut acc = 1u8;
        while exp != 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn div(self, a: u8, b: u8) -> Result<u8> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Canonical evaluation point for participant `i`: the element whose value is `i`.
    pub fn point(self, i: usize) -> Result<u8> {
        if i == 0 || i > self.max_participants() {
            return Err(Error::EvaluationPointsExhausted {
                index: i,
                field: self,
            });
        }
        Ok(i as u8)
    }

    /// Checks the element is in range for this field.
    pub fn element(self, value: u8) -> Result<FieldElement> {
        if u16::from(value) >= self.order() {
            return Err(Error::ElementOutOfRange { value, field: self });
        }
        Ok(FieldElement { value, field: self })
    }

    pub fn zero(self) -> FieldElement {
        FieldElement { value: 0, field: self }
    }

    pub fn one(self) -> FieldElement {
        FieldElement { value: 1, field: self }
    }

    /// Iterates over every element of the field.
    pub fn elements(self) -> impl Iterator<Item = u8> {
        (0..self.order()).map(|v| v as u8)
    }

    /// Unpacks bytes into symbols, most-significant bits first.
    pub fn unpack(self, bytes: &[u8]) -> Vec<u8> {
        match self {
            Field::Gf256 => bytes.to_vec(),
            Field::Gf4 => bytes
                .iter()
                .flat_map(|&b| [b >> 6, (b >> 4) & 3, (b >> 2) & 3, b & 3])
                .collect(),
        }
    }

    /// Packs symbols into bytes, most-significant bits first. A trailing partial
    /// byte is filled with zero bits.
    pub fn pack(self, symbols: &[u8]) -> Vec<u8> {
        match self {
            Field::Gf256 => symbols.to_vec(),
            Field::Gf4 => symbols
                .chunks(4)
                .map(|chunk| {
                    chunk
                        .iter()
                        .enumerate()
                        .fold(0u8, |acc, (k, &s)| acc | (s & 3) << (6 - 2 * k))
                })
                .collect(),
        }
    }

    /// Bytes needed to pack `symbols` symbols.
    pub const fn packed_len(self, symbols: usize) -> usize {
        let per = self.symbols_per_byte();
        symbols.div_ceil(per)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s.to_ascii_lowercase().as_str() {
            "gf4" => Ok(Field::Gf4),
            "gf256" => Ok(Field::Gf256),
            _ => Err(Error::InvalidParameters(format!("unknown field `{s}`"))),
        }
    }
}

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

fn gf256_table() -> &'static [u8; 65536] {
    static TABLE: OnceLock<Box<[u8; 65536]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = Box::new([0u8; 65536]);
        for a in 0..=255u8 {
            for b in 0..=255u8 {
                table[usize::from(a) << 8 | usize::from(b)] = Field::Gf256.mul_reference(a, b);
            }
        }
        table
    })
}

/// A value tagged with the field it lives in. Mixed-field arithmetic is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u8,
    field: Field,
}

impl FieldElement {
    pub fn value(self) -> u8 {
        self.value
    }

    pub fn field(self) -> Field {
        self.field
    }

    /// The canonical evaluation point `alpha_i` (value `i`) for `1 <= i <= q - 1`.
    pub fn from_index(i: usize, field: Field) -> Result<FieldElement> {
        Ok(FieldElement {
            value: field.point(i)?,
            field,
        })
    }

    fn same_field(self, other: FieldElement) -> Result<Field> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(self.field)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: FieldElement) -> Result<FieldElement> {
        let field = self.same_field(other)?;
        Ok(FieldElement {
            value: field.add(self.value, other.value),
            field,
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: FieldElement) -> Result<FieldElement> {
        let field = self.same_field(other)?;
        Ok(FieldElement {
            value: field.mul(self.value, other.value),
            field,
        })
    }

    pub fn inv(self) -> Result<FieldElement> {
        Ok(FieldElement {
            value: self.field.inv(self.value)?,
            field: self.field,
        })
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#04x}@{}", self.value, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    const ALPHA: u8 = 2;
    const ALPHA_PLUS_ONE: u8 = 3;

    fn gf4(v: u8) -> FieldElement {
        Field::Gf4.element(v).unwrap()
    }

    fn gf256(v: u8) -> FieldElement {
        Field::Gf256.element(v).unwrap()
    }

    /// Degree of a polynomial over GF(2) encoded as bits.
    fn degree(p: u32) -> i32 {
        31 - p.leading_zeros() as i32
    }

    /// Remainder of GF(2)[x] division.
    fn poly_rem(mut a: u32, b: u32) -> u32 {
        while a != 0 && degree(a) >= degree(b) {
            a ^= b << (degree(a) - degree(b));
        }
        a
    }

    #[test]
    fn reduction_polynomials_are_irreducible() {
        for field in Field::ALL {
            let poly = u32::from(field.reduction_poly());
            assert_eq!(degree(poly), field.bits() as i32);
            // any factor has degree between 1 and m/2
            for divisor in 2u32..(1 << (field.bits() / 2 + 1)) {
                assert_ne!(poly_rem(poly, divisor), 0, "{field} divisible by {divisor:#b}");
            }
        }
    }

    #[test]
    fn order_and_nonzero_count() {
        assert_eq!(Field::Gf4.order(), 4);
        assert_eq!(Field::Gf256.order(), 256);
        for field in Field::ALL {
            assert_eq!(field.elements().filter(|&v| v != 0).count(), field.max_participants());
        }
    }

    #[test]
    fn add_examples() {
        assert_eq!(gf4(ALPHA).add(gf4(ALPHA_PLUS_ONE)).unwrap(), gf4(1));
        for a in Field::Gf4.elements() {
            assert_eq!(gf4(a).add(Field::Gf4.zero()).unwrap(), gf4(a));
        }
        // XOR oracle
        assert_eq!(0x57u8 ^ 0x83, 0xD4);
        assert_eq!(gf256(0x57).add(gf256(0x83)).unwrap(), gf256(0xD4));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(gf4(ALPHA).mul(gf4(ALPHA)).unwrap(), gf4(ALPHA_PLUS_ONE));
        for field in Field::ALL {
            for a in field.elements() {
                assert_eq!(field.mul(a, 1), a);
            }
        }
        // 0x80 * x = x^8 = x^4 + x^3 + x + 1
        assert_eq!(gf256(0x02).mul(gf256(0x80)).unwrap(), gf256(0x1B));
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        assert!(matches!(
            gf4(1).add(gf256(1)),
            Err(Error::FieldMismatch { .. })
        ));
        assert!(matches!(
            gf4(1).mul(gf256(1)),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn out_of_range_element() {
        assert!(Field::Gf4.element(4).is_err());
        assert!(Field::Gf4.element(3).is_ok());
    }

    #[test]
    fn inverse_examples() {
        for field in Field::ALL {
            assert_eq!(field.inv(1).unwrap(), 1);
            assert!(matches!(field.inv(0), Err(Error::DivisionByZero)));
        }
        // exhaustive search of the multiplication table
        let searched = Field::Gf4
            .elements()
            .find(|&b| Field::Gf4.mul_reference(ALPHA, b) == 1)
            .unwrap();
        assert_eq!(searched, ALPHA_PLUS_ONE);
        assert_eq!(gf4(ALPHA).inv().unwrap(), gf4(ALPHA_PLUS_ONE));

        let mut rng = ChaCha20Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let a: u8 = rng.gen_range(1..=255);
            assert_eq!(Field::Gf256.mul(a, Field::Gf256.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn table_matches_reference() {
        for field in Field::ALL {
            for a in field.elements() {
                for b in field.elements() {
                    assert_eq!(field.mul(a, b), field.mul_reference(a, b));
                }
            }
        }
    }

    #[test]
    fn gf4_field_axioms_exhaustive() {
        let f = Field::Gf4;
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(f.add(a, b), b), a);
                assert_eq!(f.mul(a, b) == 0, a == 0 || b == 0);
                for c in f.elements() {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn gf256_field_axioms_randomized() {
        let f = Field::Gf256;
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        for _ in 0..20_000 {
            let (a, b, c): (u8, u8, u8) = rng.gen();
            assert_eq!(f.mul(a, b), f.mul(b, a));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.add(f.add(a, b), b), a);
        }
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b) == 0, a == 0 || b == 0);
            }
        }
    }

    #[test]
    fn evaluation_points() {
        assert_eq!(FieldElement::from_index(1, Field::Gf4).unwrap(), gf4(1));
        assert_eq!(FieldElement::from_index(2, Field::Gf4).unwrap(), gf4(ALPHA));
        assert!(matches!(
            FieldElement::from_index(4, Field::Gf4),
            Err(Error::EvaluationPointsExhausted { index: 4, .. })
        ));
        assert!(FieldElement::from_index(0, Field::Gf4).is_err());
        for field in Field::ALL {
            let points: std::collections::HashSet<u8> = (1..=field.max_participants())
                .map(|i| field.point(i).unwrap())
                .collect();
            assert_eq!(points.len(), field.max_participants());
            assert!(!points.contains(&0));
        }
    }

    #[test]
    fn gf4_packing_is_msb_first() {
        let symbols = [1, 2, 3, 0, 3];
        let packed = Field::Gf4.pack(&symbols);
        assert_eq!(packed, vec![0b01_10_11_00, 0b11_00_00_00]);
        assert_eq!(Field::Gf4.unpack(&packed[..1]), vec![1, 2, 3, 0]);
        assert_eq!(Field::Gf4.packed_len(5), 2);
        assert_eq!(Field::Gf256.packed_len(5), 5);
    }

    #[test]
    fn field_ids() {
        for field in Field::ALL {
            assert_eq!(Field::from_id(field.id()).unwrap(), field);
            assert_eq!(field.name().parse::<Field>().unwrap(), field);
        }
        assert!(Field::from_id(0x03).is_err());
    }
}
