//! Generalized Pell strings and their binary block encodings.
//!
//! Fix an arity `k >= 1`. A *generalized Pell string* is a word over
//! `{0, 1, ..., k}` in which every maximal run of the top symbol `k` has
//! even length — equivalently, a word that factors (uniquely) over the
//! alphabet `{0, 1, ..., k-1, kk}`. For k = 1 these are the binary words
//! with even runs of 1s; for k = 2 the ternary words counted by the Pell
//! numbers. The number of such words of length n is the k-Fibonacci number
//! `F(n+1, k)` where `F(n, k) = k*F(n-1, k) + F(n-2, k)`, `F(0) = 0`,
//! `F(1) = 1`.
//!
//! The block encoding sends a length-n string to a binary word of length
//! k*n: letter `0` maps to the zero block `0^k`, letter `i`
//! (1 <= i <= k-1) to the block with a single 1 in position i, and a
//! factor `kk` to the double block `0^(k-1) 1 0^k`. Encoded words never
//! contain `11` and always end in 0, and the popcount of the encoding is
//! the weight statistic [`PellString::weight`].

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// A word over `{0, ..., k}` in which every maximal run of `k` has even
/// length. Value type: equality, ordering and hashing are structural on
/// the symbol sequence (and arity).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PellString {
    symbols: Vec<u8>,
    arity: u8,
}

impl PellString {
    /// Validates `symbols` as a generalized Pell string over
    /// `{0, ..., arity}`.
    pub fn new(symbols: Vec<u8>, arity: u8) -> Result<Self> {
        if is_pell_string(&symbols, arity)? {
            Ok(Self { symbols, arity })
        } else {
            Err(Error::NotPellString {
                word: render_symbols(&symbols, arity),
                arity,
            })
        }
    }

    /// The empty string, the single vertex of the order-0 graphs.
    pub fn empty(arity: u8) -> Self {
        Self {
            symbols: Vec::new(),
            arity,
        }
    }

    /// The all-zero string `0^n`.
    pub fn zeros(n: usize, arity: u8) -> Self {
        Self {
            symbols: vec![0; n],
            arity,
        }
    }

    /// Skips validation; callers guarantee the run condition holds.
    pub(crate) fn from_symbols_unchecked(symbols: Vec<u8>, arity: u8) -> Self {
        debug_assert!(matches!(is_pell_string(&symbols, arity), Ok(true)));
        Self { symbols, arity }
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// True if some symbol is 0; the zero-free strings are the tops of the
    /// maximal induced cubes (k >= 2).
    pub fn has_zero(&self) -> bool {
        self.symbols.contains(&0)
    }

    /// The weight statistic: the number of symbols from `{1, ..., k-1}`
    /// plus half the number of top symbols k. Equals the popcount of the
    /// block encoding, and the graph distance to `0^n` in the Munarini
    /// graph.
    pub fn weight(&self) -> usize {
        let k = self.arity;
        let mut w = 0usize;
        let mut top = 0usize;
        for &s in &self.symbols {
            if s == k {
                top += 1;
            } else if s > 0 {
                w += 1;
            }
        }
        debug_assert!(top % 2 == 0);
        w + top / 2
    }

    /// Parses the text form produced by `Display`: decimal symbols, bare
    /// concatenation for arity <= 9 and '.'-separated otherwise.
    pub fn parse(text: &str, arity: u8) -> Result<Self> {
        let symbols = parse_symbols(text, arity)?;
        Self::new(symbols, arity)
    }
}

impl fmt::Display for PellString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_symbols(&self.symbols, self.arity))
    }
}

fn render_symbols(symbols: &[u8], arity: u8) -> String {
    if arity <= 9 {
        symbols.iter().map(|s| char::from(b'0' + s)).collect()
    } else {
        symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn parse_symbols(text: &str, arity: u8) -> Result<Vec<u8>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let bad = |t: &str| Error::UnsupportedParameter(format!("unparsable symbol text: {t:?}"));
    if arity <= 9 {
        text.chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| bad(text)))
            .collect()
    } else {
        text.split('.')
            .map(|part| part.parse::<u8>().map_err(|_| bad(text)))
            .collect()
    }
}

/// Checks the defining run condition: every maximal run of the top symbol
/// `arity` has even length. Symbols above the arity are an input error.
pub fn is_pell_string(symbols: &[u8], arity: u8) -> Result<bool> {
    if arity == 0 {
        return Err(Error::UnsupportedParameter("arity must be at least 1".into()));
    }
    for &s in symbols {
        if s > arity {
            return Err(Error::SymbolOutOfRange {
                symbol: s as u32,
                arity: arity as u32,
            });
        }
    }
    let mut run = 0usize;
    for &s in symbols {
        if s == arity {
            run += 1;
        } else {
            if run % 2 != 0 {
                return Ok(false);
            }
            run = 0;
        }
    }
    Ok(run % 2 == 0)
}

/// Enumerates all generalized Pell strings of length `n` over arity `k` in
/// lexicographic order. The count is the k-Fibonacci number `F(n+1, k)`.
///
/// Lexicographic order falls out of the factorization: the strings
/// starting with `0, ..., k-1` precede the ones starting with `kk`, and
/// each group recursively carries the order of its tails.
pub fn enumerate_pell_strings(n: usize, k: u8) -> Result<Vec<PellString>> {
    if k == 0 {
        return Err(Error::UnsupportedParameter("arity must be at least 1".into()));
    }
    // lists[m] holds the length-m symbol sequences in lexicographic order.
    let mut lists: Vec<Vec<Vec<u8>>> = vec![vec![Vec::new()]];
    for m in 1..=n {
        let mut next = Vec::new();
        for first in 0..k {
            for tail in &lists[m - 1] {
                let mut s = Vec::with_capacity(m);
                s.push(first);
                s.extend_from_slice(tail);
                next.push(s);
            }
        }
        if m >= 2 {
            for tail in &lists[m - 2] {
                let mut s = Vec::with_capacity(m);
                s.push(k);
                s.push(k);
                s.extend_from_slice(tail);
                next.push(s);
            }
        }
        lists.push(next);
    }
    Ok(lists
        .pop()
        .unwrap()
        .into_iter()
        .map(|s| PellString::from_symbols_unchecked(s, k))
        .collect())
}

/// Enumerates the zero-free generalized Pell strings of length `n`
/// (lexicographic). For k >= 2 their encodings are exactly the maximal
/// vertices of the daisy-cube embedding of the Munarini graph; the
/// characterization does not hold for k = 1, so that arity is rejected.
pub fn enumerate_maximal_strings(n: usize, k: u8) -> Result<Vec<PellString>> {
    if k < 2 {
        return Err(Error::UnsupportedParameter(
            "maximal strings are defined for arity >= 2".into(),
        ));
    }
    Ok(enumerate_pell_strings(n, k)?
        .into_iter()
        .filter(|s| !s.has_zero())
        .collect())
}

/// A binary word, the label type for hypercube embeddings. Value type with
/// structural equality / ordering / hashing; `<=` in the subcube sense is
/// [`BinaryLabel::le`], not the derived `Ord`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BinaryLabel {
    bits: Vec<bool>,
}

impl BinaryLabel {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of 1-bits.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Positions of the 1-bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&i| self.bits[i]).collect()
    }

    /// Hamming distance; the labels must have equal length.
    pub fn hamming(&self, other: &Self) -> usize {
        debug_assert_eq!(self.len(), other.len());
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Coordinatewise order: true if every 1-bit of `self` is set in
    /// `other`.
    pub fn le(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.bits.iter().zip(&other.bits).all(|(a, b)| !a || *b)
    }

    /// Copy with bit `i` set to `value`.
    pub fn with_bit(&self, i: usize, value: bool) -> Self {
        let mut bits = self.bits.clone();
        bits[i] = value;
        Self { bits }
    }

    /// Coordinatewise majority of three labels of equal length.
    pub fn majority(a: &Self, b: &Self, c: &Self) -> Self {
        debug_assert!(a.len() == b.len() && b.len() == c.len());
        let bits = (0..a.len())
            .map(|i| {
                let ones = a.bits[i] as u8 + b.bits[i] as u8 + c.bits[i] as u8;
                ones >= 2
            })
            .collect();
        Self { bits }
    }

    /// Parses a bare bit string such as "100100".
    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::UnsupportedParameter(format!(
                    "unparsable bit string: {text:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl fmt::Display for BinaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A binary word of length `k*n` that factors over the block alphabet
/// `{A_0, ..., A_(k-1), A_k A_0}`, where `A_0 = 0^k` and `A_i` has a
/// single 1 in position i. These are exactly the images of the block
/// encoding, and they are Fibonacci strings (no `11` factor) ending in 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MunariniString {
    label: BinaryLabel,
    arity: u8,
}

impl MunariniString {
    /// Validates the factorization: the word splits into `k`-blocks, each
    /// block carries at most one 1, and every `A_k` block (1 in the last
    /// position) is immediately followed by a zero block.
    pub fn new(label: BinaryLabel, arity: u8) -> Result<Self> {
        if arity == 0 {
            return Err(Error::UnsupportedParameter("arity must be at least 1".into()));
        }
        let k = arity as usize;
        let reject = || Error::NotMunariniString {
            word: label.to_string(),
            arity,
        };
        if label.len() % k != 0 {
            return Err(reject());
        }
        let blocks = label.len() / k;
        let mut b = 0;
        while b < blocks {
            let block = &label.bits()[b * k..(b + 1) * k];
            let ones: Vec<usize> = (0..k).filter(|&i| block[i]).collect();
            match ones.as_slice() {
                [] => b += 1,
                [pos] if *pos + 1 < k => b += 1,
                [pos] if *pos + 1 == k => {
                    // A_k: the next block must exist and be all zero.
                    if b + 1 >= blocks {
                        return Err(reject());
                    }
                    let next = &label.bits()[(b + 1) * k..(b + 2) * k];
                    if next.iter().any(|&x| x) {
                        return Err(reject());
                    }
                    b += 2;
                }
                _ => return Err(reject()),
            }
        }
        Ok(Self { label, arity })
    }

    pub fn label(&self) -> &BinaryLabel {
        &self.label
    }

    pub fn into_label(self) -> BinaryLabel {
        self.label
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    /// Number of `k`-blocks, i.e. the length of the decoded string.
    pub fn block_count(&self) -> usize {
        self.label.len() / self.arity as usize
    }
}

impl fmt::Display for MunariniString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.label.fmt(f)
    }
}

/// Block-encodes a generalized Pell string into a binary word of length
/// `k * n`: `0 -> 0^k`, `i -> 0^(i-1) 1 0^(k-i)`, `kk -> 0^(k-1) 1 0^k`.
/// The encoding is a bijection onto the valid block words and an
/// isomorphism onto an induced subgraph of the Fibonacci cube of order
/// `k * n`.
pub fn encode_psi(u: &PellString) -> MunariniString {
    let k = u.arity() as usize;
    let mut bits = vec![false; k * u.len()];
    let mut pos = 0usize;
    let mut i = 0usize;
    let symbols = u.symbols();
    while i < symbols.len() {
        let s = symbols[i] as usize;
        if s == k {
            // A factor kk: block A_k (1 in the last position) then A_0.
            bits[pos + k - 1] = true;
            pos += 2 * k;
            i += 2;
        } else {
            if s > 0 {
                bits[pos + s - 1] = true;
            }
            pos += k;
            i += 1;
        }
    }
    MunariniString {
        label: BinaryLabel::new(bits),
        arity: u.arity(),
    }
}

/// Decodes a block word back to its generalized Pell string; inverse of
/// [`encode_psi`]. Validation already happened in [`MunariniString::new`].
pub fn decode_psi(v: &MunariniString) -> PellString {
    let k = v.arity() as usize;
    let bits = v.label().bits();
    let mut symbols = Vec::with_capacity(v.block_count());
    let mut b = 0usize;
    let blocks = v.block_count();
    while b < blocks {
        let block = &bits[b * k..(b + 1) * k];
        match (0..k).find(|&i| block[i]) {
            None => {
                symbols.push(0);
                b += 1;
            }
            Some(pos) if pos + 1 < k => {
                symbols.push((pos + 1) as u8);
                b += 1;
            }
            Some(_) => {
                // A_k A_0 encodes the factor kk.
                symbols.push(k as u8);
                symbols.push(k as u8);
                b += 2;
            }
        }
    }
    PellString::from_symbols_unchecked(symbols, v.arity())
}

/// Counts the length-n words over `{0, ..., 2k}` in which every maximal
/// run of 0s and every maximal run of 1s has even length. This count
/// equals the total number of induced subcubes of the Munarini graph
/// `M(n, k)`, and satisfies `a(n) = (2k-1) a(n-1) + 2 a(n-2)` with
/// `a(0) = 1`, `a(1) = 2k - 1`.
pub fn count_ank_words(n: usize, k: u8) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::UnsupportedParameter("arity must be at least 1".into()));
    }
    let mult = BigInt::from(2 * k as i64 - 1);
    let mut prev = BigInt::from(1); // a(0)
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = mult.clone(); // a(1)
    for _ in 2..=n {
        let next = &mult * &cur + 2 * &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Deduplicated sorted weights helper used by tests and reports: the
/// number of strings of each weight among `strings`.
pub fn weight_histogram(strings: &[PellString]) -> Vec<usize> {
    let mut hist = Vec::new();
    for s in strings {
        let w = s.weight();
        if hist.len() <= w {
            hist.resize(w + 1, 0);
        }
        hist[w] += 1;
    }
    hist
}

/// Internal helper for tests: checks that a slice of strings contains no
/// duplicates.
#[allow(dead_code)]
pub(crate) fn all_distinct(strings: &[PellString]) -> bool {
    let set: HashSet<_> = strings.iter().collect();
    set.len() == strings.len()
}
