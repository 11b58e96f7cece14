//! Binary and k-ary reflected Gray codes, and the binary node labels built
//! from them.
//!
//! A cube node with digits `(d_0, ..., d_{n-1})` in a `k`-ary cube, `k = 2^m`,
//! is labelled by concatenating the `m`-bit binary reflected Gray codeword of
//! each digit, dimension 0 first. Two nodes whose digits differ by one in a
//! single dimension therefore have labels at Hamming distance one.

use std::fmt;
use std::str::FromStr;

use crate::embedding::{check_fit, GridSpec};
use crate::error::{Error, Result};
use crate::topology::{Coordinate, CubeSpec};

/// Widest codeword `bin_gray_encode` accepts.
pub const MAX_WIDTH: u32 = 63;

/// A fixed-width string of bits, most significant first.
///
/// Zero-width strings exist only as the empty fields of a [`LabelPartition`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitString { bits }
    }

    /// The `width` low bits of `value`, most significant first.
    pub fn from_value(value: u64, width: u32) -> Self {
        let bits = (0..width).rev().map(|i| (value >> i) & 1 == 1).collect();
        BitString { bits }
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Integer value of the bits read as an unsigned binary number.
    ///
    /// Only meaningful for widths up to 64.
    pub fn value(&self) -> u64 {
        self.bits
            .iter()
            .fold(0, |acc, &b| (acc << 1) | u64::from(b))
    }

    pub fn slice(&self, start: usize, end: usize) -> BitString {
        BitString {
            bits: self.bits[start..end].to_vec(),
        }
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BitString { bits }
    }

    /// Number of positions where the two strings differ. `None` on width mismatch.
    pub fn hamming(&self, other: &BitString) -> Option<usize> {
        (self.width() == other.width()).then(|| {
            self.bits
                .iter()
                .zip(&other.bits)
                .filter(|(a, b)| a != b)
                .count()
        })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Validation(vec![format!(
                    "bit string {s:?} contains {other:?}"
                )])),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitString::from_bits)
    }
}

/// A node label split into the row field (most significant bits), the unused
/// middle bits, and the column field (least significant bits).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelPartition {
    pub row: BitString,
    pub pad: BitString,
    pub col: BitString,
}

impl LabelPartition {
    pub fn reassemble(&self) -> BitString {
        self.row.concat(&self.pad).concat(&self.col)
    }
}

/// `ceil(log2(x))` for `x >= 1`.
pub fn ceil_log2(x: u64) -> u32 {
    assert!(x >= 1, "ceil_log2 of zero");
    if x == 1 {
        0
    } else {
        u64::BITS - (x - 1).leading_zeros()
    }
}

/// `log2(k)` when `k` is a power of two.
pub fn exact_log2(k: u32) -> Option<u32> {
    k.is_power_of_two().then(|| k.trailing_zeros())
}

/// The `index`-th codeword of the `width`-bit binary reflected Gray code.
pub fn bin_gray_encode(index: u64, width: u32) -> Result<BitString> {
    if width > MAX_WIDTH {
        return Err(Error::domain(
            "width",
            width.into(),
            format!("<= {MAX_WIDTH}"),
        ));
    }
    if index >> width != 0 {
        return Err(Error::domain("index", index, format!("< 2^{width}")));
    }
    Ok(BitString::from_value(index ^ (index >> 1), width))
}

/// Inverse of [`bin_gray_encode`]: the rank of a codeword.
pub fn bin_gray_decode(code: &BitString) -> u64 {
    // Each rank bit is the XOR of all codeword bits at or above it.
    let mut parity = false;
    code.bits().iter().fold(0u64, |acc, &b| {
        parity ^= b;
        (acc << 1) | u64::from(parity)
    })
}

fn kary_capacity(k: u32, d: u32) -> Result<u64> {
    if k < 2 {
        return Err(Error::domain("k", k.into(), ">= 2"));
    }
    if d < 1 {
        return Err(Error::domain("d", d.into(), ">= 1"));
    }
    u64::from(k)
        .checked_pow(d)
        .ok_or_else(|| Error::domain("k^d", u64::MAX, "representable in 64 bits"))
}

/// The `index`-th tuple of the reflected base-`k` Gray code on `d` digits.
///
/// A digit runs upward while the number formed by the digits above it is
/// even and downward while it is odd, so consecutive tuples differ in a single
/// digit by exactly one, never wrapping from `k - 1` to `0`.
pub fn kary_gray_rank_to_tuple(index: u64, k: u32, d: u32) -> Result<Vec<u32>> {
    let capacity = kary_capacity(k, d)?;
    if index >= capacity {
        return Err(Error::domain(
            "index",
            index,
            format!("< {k}^{d} = {capacity}"),
        ));
    }
    let k64 = u64::from(k);
    let mut digits = vec![0u32; d as usize];
    let mut rest = index;
    for slot in digits.iter_mut().rev() {
        *slot = (rest % k64) as u32;
        rest /= k64;
    }
    // prefix_odd tracks the parity of the number formed by the plain digits so far.
    let mut prefix_odd = false;
    for slot in digits.iter_mut() {
        let plain = *slot;
        if prefix_odd {
            *slot = k - 1 - plain;
        }
        prefix_odd = ((u64::from(prefix_odd) * k64 + u64::from(plain)) & 1) == 1;
    }
    Ok(digits)
}

/// Inverse of [`kary_gray_rank_to_tuple`].
pub fn kary_gray_tuple_to_rank(tuple: &[u32], k: u32, d: u32) -> Result<u64> {
    kary_capacity(k, d)?;
    if tuple.len() != d as usize {
        return Err(Error::domain(
            "tuple length",
            tuple.len() as u64,
            format!("= {d}"),
        ));
    }
    let k64 = u64::from(k);
    let mut rank = 0u64;
    let mut prefix_odd = false;
    for &digit in tuple {
        if digit >= k {
            return Err(Error::domain("digit", digit.into(), format!("< {k}")));
        }
        let plain = if prefix_odd { k - 1 - digit } else { digit };
        rank = rank * k64 + u64::from(plain);
        prefix_odd = rank & 1 == 1;
    }
    Ok(rank)
}

fn require_pow2(k: u32) -> Result<u32> {
    exact_log2(k).ok_or(Error::UnsupportedArity {
        k,
        suggested: k.next_power_of_two(),
    })
}

/// The `n * log2(k)`-bit label of a node: per-dimension Gray codewords,
/// dimension 0 most significant.
pub fn label_of_coordinate(coord: &Coordinate, k: u32) -> Result<BitString> {
    let m = require_pow2(k)?;
    let mut bits = Vec::with_capacity(coord.len() * m as usize);
    for &digit in coord.digits() {
        if digit >= k {
            return Err(Error::domain("digit", digit.into(), format!("< {k}")));
        }
        bits.extend_from_slice(bin_gray_encode(digit.into(), m)?.bits());
    }
    Ok(BitString::from_bits(bits))
}

/// Field widths `(row, pad, col)` of a label for this grid and cube.
pub fn partition_widths(grid: &GridSpec, cube: &CubeSpec) -> Result<(usize, usize, usize)> {
    let m = require_pow2(cube.k())?;
    check_fit(grid, cube)?;
    let total = (cube.n() * m) as usize;
    let row = ceil_log2(grid.rows().into()) as usize;
    let col = ceil_log2(grid.cols().into()) as usize;
    Ok((row, total - row - col, col))
}

/// Split a label into row, pad, and column fields.
pub fn partition_label(
    label: &BitString,
    grid: &GridSpec,
    cube: &CubeSpec,
) -> Result<LabelPartition> {
    let (row, pad, col) = partition_widths(grid, cube)?;
    let total = row + pad + col;
    if label.width() != total {
        return Err(Error::domain(
            "label width",
            label.width() as u64,
            format!("= {total}"),
        ));
    }
    Ok(LabelPartition {
        row: label.slice(0, row),
        pad: label.slice(row, row + pad),
        col: label.slice(row + pad, total),
    })
}
