//! GF(4) arithmetic and linear codes under the Hermitian inner product.
//!
//! Elements are encoded in two bits as `lo + 2*hi` with `0, 1, ω = 2, ω² = 3`,
//! so addition is XOR. Vectors of length at most 64 are packed into two bit
//! planes, which makes codeword enumeration a stream of XORs.
//!
//! Pauli convention used throughout the crate: `1 ↔ X`, `ω ↔ Z`, `ω² ↔ Y`.

use crate::enums::Enumerator;
use rayon::prelude::*;
use std::fmt;
use std::ops::{Add, Mul};
use thiserror::Error;

pub const MAX_LENGTH: usize = 64;
pub const DEFAULT_MAX_DIMENSION: u32 = 18;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf4Error {
    #[error("vector length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("code length {0} exceeds the supported maximum of 64")]
    TooLong(usize),
    #[error("generators are linearly dependent (rank {rank} < {k})")]
    Dependent { rank: usize, k: usize },
    #[error("enumerating 4^{k} codewords exceeds the budget 4^{limit}")]
    BudgetExceeded { k: usize, limit: u32 },
    #[error("coordinate {coord} out of range for length {n}")]
    IndexOutOfRange { coord: usize, n: usize },
    #[error("code is not Hermitian self-orthogonal")]
    NotSelfOrthogonal,
    #[error("codeword {0} has odd weight, so the code is not an M3-code")]
    OddWeight(String),
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA2: Gf4 = Gf4(3);
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    pub fn from_bits(bits: u8) -> Gf4 {
        Gf4(bits & 3)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius `x -> x^2`, which swaps ω and ω².
    pub fn conj(self) -> Gf4 {
        self * self
    }

    pub fn inv(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            1 => Some(Gf4::ONE),
            2 => Some(Gf4::OMEGA2),
            _ => Some(Gf4::OMEGA),
        }
    }

    pub fn from_char(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA2),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }

    pub fn pauli(self) -> char {
        ['I', 'X', 'Z', 'Y'][self.0 as usize]
    }

    fn log(self) -> u8 {
        match self.0 {
            1 => 0,
            2 => 1,
            3 => 2,
            _ => unreachable!(),
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        if self.is_zero() || rhs.is_zero() {
            return Gf4::ZERO;
        }
        Gf4::ALL[1 + ((self.log() + rhs.log()) % 3) as usize]
    }
}

/// Packed GF(4) vector: entry `i` is `lo_i + 2*hi_i`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf4Vector {
    lo: u64,
    hi: u64,
    len: usize,
}

impl Gf4Vector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_LENGTH);
        Gf4Vector { lo: 0, hi: 0, len }
    }

    pub fn from_entries(entries: &[Gf4]) -> Self {
        let mut v = Gf4Vector::zero(entries.len());
        for (i, e) in entries.iter().enumerate() {
            v.set(i, *e);
        }
        v
    }

    /// Parses a word over `{0, 1, w, W}`; whitespace is ignored.
    pub fn parse(word: &str) -> Option<Self> {
        let entries: Option<Vec<Gf4>> = word
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(Gf4::from_char)
            .collect();
        let entries = entries?;
        (entries.len() <= MAX_LENGTH).then(|| Gf4Vector::from_entries(&entries))
    }

    /// Parses a Pauli word over `{I, X, Y, Z}` using the crate convention.
    pub fn from_pauli(word: &str) -> Option<Self> {
        let entries: Option<Vec<Gf4>> = word
            .chars()
            .map(|c| match c {
                'I' => Some(Gf4::ZERO),
                'X' => Some(Gf4::ONE),
                'Z' => Some(Gf4::OMEGA),
                'Y' => Some(Gf4::OMEGA2),
                _ => None,
            })
            .collect();
        Some(Gf4Vector::from_entries(&entries?))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Gf4 {
        debug_assert!(i < self.len);
        Gf4::from_bits((((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)) as u8)
    }

    pub fn set(&mut self, i: usize, value: Gf4) {
        assert!(i < self.len);
        let mask = 1u64 << i;
        self.lo = (self.lo & !mask) | (((value.bits() & 1) as u64) << i);
        self.hi = (self.hi & !mask) | ((((value.bits() >> 1) & 1) as u64) << i);
    }

    pub fn entries(&self) -> Vec<Gf4> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn weight(&self) -> usize {
        (self.lo | self.hi).count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        (self.lo | self.hi) == 0
    }

    /// Bit planes: `lo` marks entries 1 and ω², `hi` marks ω and ω².
    pub fn planes(&self) -> (u64, u64) {
        (self.lo, self.hi)
    }

    pub fn scale(&self, c: Gf4) -> Gf4Vector {
        let (lo, hi) = match c.bits() {
            0 => (0, 0),
            1 => (self.lo, self.hi),
            2 => (self.hi, self.lo ^ self.hi),
            _ => (self.lo ^ self.hi, self.lo),
        };
        Gf4Vector { lo, hi, len: self.len }
    }

    pub fn conj(&self) -> Gf4Vector {
        Gf4Vector { lo: self.lo ^ self.hi, hi: self.hi, len: self.len }
    }

    /// `Σ u_i conj(v_i)`
    pub fn hermitian_dot(&self, other: &Gf4Vector) -> Gf4 {
        let v = other.conj();
        let lo = (self.lo & v.lo) ^ (self.hi & v.hi);
        let hi = (self.lo & v.hi) ^ (self.hi & v.lo) ^ (self.hi & v.hi);
        Gf4::from_bits(((lo.count_ones() & 1) | ((hi.count_ones() & 1) << 1)) as u8)
    }

    pub fn remove(&self, coord: usize) -> Gf4Vector {
        let low_mask = (1u64 << coord) - 1;
        let squeeze = |x: u64| (x & low_mask) | ((x >> (coord + 1)) << coord);
        Gf4Vector { lo: squeeze(self.lo), hi: squeeze(self.hi), len: self.len - 1 }
    }

    pub fn insert_zero(&self, coord: usize) -> Gf4Vector {
        let low_mask = (1u64 << coord) - 1;
        let spread = |x: u64| (x & low_mask) | ((x & !low_mask) << 1);
        Gf4Vector { lo: spread(self.lo), hi: spread(self.hi), len: self.len + 1 }
    }

    pub fn pauli_string(&self) -> String {
        (0..self.len).map(|i| self.get(i).pauli()).collect()
    }
}

impl Add for Gf4Vector {
    type Output = Gf4Vector;
    fn add(self, rhs: Gf4Vector) -> Gf4Vector {
        debug_assert_eq!(self.len, rhs.len);
        Gf4Vector { lo: self.lo ^ rhs.lo, hi: self.hi ^ rhs.hi, len: self.len }
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i).to_char())?;
        }
        Ok(())
    }
}

/// Row-reduces in place; returns the pivot column of each surviving row.
fn row_reduce(rows: &mut Vec<Gf4Vector>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].get(col).is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].get(col).inv().unwrap();
        rows[r] = rows[r].scale(inv);
        for i in 0..rows.len() {
            if i != r {
                let c = rows[i].get(col);
                if !c.is_zero() {
                    rows[i] = rows[i] + rows[r].scale(c);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A linear `[n, k]` code over GF(4), stored by an independent generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf4Code {
    n: usize,
    generators: Vec<Gf4Vector>,
}

impl Gf4Code {
    pub fn new(n: usize, generators: Vec<Gf4Vector>) -> Result<Self, Gf4Error> {
        if n > MAX_LENGTH {
            return Err(Gf4Error::TooLong(n));
        }
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Gf4Error::LengthMismatch { expected: n, got: g.len() });
        }
        let mut reduced = generators.clone();
        let rank = row_reduce(&mut reduced, n).len();
        if rank < generators.len() {
            return Err(Gf4Error::Dependent { rank, k: generators.len() });
        }
        Ok(Gf4Code { n, generators })
    }

    /// Row-space of arbitrary (possibly dependent) vectors.
    pub fn span(n: usize, vectors: Vec<Gf4Vector>) -> Result<Self, Gf4Error> {
        if let Some(g) = vectors.iter().find(|g| g.len() != n) {
            return Err(Gf4Error::LengthMismatch { expected: n, got: g.len() });
        }
        let mut rows = vectors;
        row_reduce(&mut rows, n);
        Gf4Code::new(n, rows)
    }

    pub fn zero_code(n: usize) -> Self {
        Gf4Code { n, generators: Vec::new() }
    }

    pub fn full_space(n: usize) -> Self {
        let generators = (0..n)
            .map(|i| {
                let mut v = Gf4Vector::zero(n);
                v.set(i, Gf4::ONE);
                v
            })
            .collect();
        Gf4Code { n, generators }
    }

    /// The classical face of the 5-qubit code: `XZZXI` and its cyclic shift.
    pub fn five_qubit() -> Self {
        let gens = ["XZZXI", "IXZZX"].map(|w| Gf4Vector::from_pauli(w).unwrap());
        Gf4Code::new(5, gens.to_vec()).unwrap()
    }

    /// The hexacode `[6,3,4]`, rows `(I | ω J + ω² I)` up to scaling.
    pub fn hexacode() -> Self {
        let gens = ["XIIXZZ", "IXIZXZ", "IIXZZX"].map(|w| Gf4Vector::from_pauli(w).unwrap());
        Gf4Code::new(6, gens.to_vec()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Gf4Vector] {
        &self.generators
    }

    /// Reduced row-echelon generators; canonical for the row space.
    pub fn rref(&self) -> Vec<Gf4Vector> {
        let mut rows = self.generators.clone();
        row_reduce(&mut rows, self.n);
        rows
    }

    pub fn same_row_space(&self, other: &Gf4Code) -> bool {
        self.n == other.n && self.rref() == other.rref()
    }

    pub fn contains(&self, v: &Gf4Vector) -> bool {
        let mut rows = self.generators.clone();
        rows.push(*v);
        row_reduce(&mut rows, self.n).len() == self.k()
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, u)| {
            self.generators[i..].iter().all(|v| u.hermitian_dot(v).is_zero())
        })
    }

    pub fn hermitian_dual(&self) -> Gf4Code {
        // v is in the dual iff conj(G) v = 0.
        let mut rows: Vec<Gf4Vector> = self.generators.iter().map(|g| g.conj()).collect();
        let pivots = row_reduce(&mut rows, self.n);
        let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = Gf4Vector::zero(self.n);
                v.set(f, Gf4::ONE);
                for (row, &p) in rows.iter().zip(&pivots) {
                    v.set(p, row.get(f));
                }
                v
            })
            .collect();
        Gf4Code { n: self.n, generators: basis }
    }

    pub fn shorten(&self, coord: usize) -> Result<Gf4Code, Gf4Error> {
        if coord >= self.n {
            return Err(Gf4Error::IndexOutOfRange { coord, n: self.n });
        }
        let mut rows = self.generators.clone();
        if let Some(p) = rows.iter().position(|r| !r.get(coord).is_zero()) {
            let pivot = rows.remove(p);
            let inv = pivot.get(coord).inv().unwrap();
            let pivot = pivot.scale(inv);
            for r in rows.iter_mut() {
                let c = r.get(coord);
                if !c.is_zero() {
                    *r = *r + pivot.scale(c);
                }
            }
        }
        let rows = rows.iter().map(|r| r.remove(coord)).collect();
        Gf4Code::new(self.n - 1, rows)
    }

    fn check_budget(&self, limit: u32) -> Result<(), Gf4Error> {
        if self.k() > limit as usize {
            return Err(Gf4Error::BudgetExceeded { k: self.k(), limit });
        }
        Ok(())
    }

    /// All `4^k` codewords, streamed.
    pub fn codewords(&self, limit: u32) -> Result<Codewords, Gf4Error> {
        self.check_budget(limit)?;
        Ok(Codewords::new(self.n, &self.generators, None))
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_distribution(&self, limit: u32) -> Result<Vec<u64>, Gf4Error> {
        self.check_budget(limit)?;
        let k = self.k();
        // Fix the top digits per worker; the merge is an order-independent sum.
        let split = k.min(3);
        let n = self.n;
        let tallies: Vec<Vec<u64>> = (0..4usize.pow(split as u32))
            .into_par_iter()
            .map(|prefix| {
                let mut base = Gf4Vector::zero(n);
                let mut p = prefix;
                for g in &self.generators[k - split..] {
                    base = base + g.scale(Gf4::from_bits((p & 3) as u8));
                    p >>= 2;
                }
                let mut tally = vec![0u64; n + 1];
                for w in Codewords::new(n, &self.generators[..k - split], Some(base)) {
                    tally[w.weight()] += 1;
                }
                tally
            })
            .collect();
        let mut total = vec![0u64; n + 1];
        for t in tallies {
            for (a, b) in total.iter_mut().zip(t) {
                *a += b;
            }
        }
        Ok(total)
    }

    pub fn weight_enumerator(&self, limit: u32) -> Result<Enumerator, Gf4Error> {
        let counts = self.weight_distribution(limit)?;
        Ok(Enumerator::from_counts(&counts))
    }

    /// Signs from Rall's rule: `+1` for weight `0 mod 4`, `-1` for `2 mod 4`.
    pub fn rall_signs(&self, limit: u32) -> Result<Vec<SignedPauli>, Gf4Error> {
        if !self.is_self_orthogonal() {
            return Err(Gf4Error::NotSelfOrthogonal);
        }
        self.codewords(limit)?
            .map(|w| match w.weight() % 4 {
                0 => Ok(SignedPauli { word: w, sign: 1 }),
                2 => Ok(SignedPauli { word: w, sign: -1 }),
                _ => Err(Gf4Error::OddWeight(w.pauli_string())),
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k());
        for g in &self.generators {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }
}

/// Streaming enumeration of all GF(4)-combinations of a generator list.
///
/// Digits advance like an odometer; each step XORs in the difference between
/// the old and new multiple of a single generator.
pub struct Codewords {
    multiples: Vec<[Gf4Vector; 4]>,
    digits: Vec<u8>,
    current: Gf4Vector,
    done: bool,
}

impl Codewords {
    fn new(n: usize, generators: &[Gf4Vector], offset: Option<Gf4Vector>) -> Self {
        let multiples = generators
            .iter()
            .map(|g| Gf4::ALL.map(|c| g.scale(c)))
            .collect::<Vec<_>>();
        Codewords {
            digits: vec![0; multiples.len()],
            multiples,
            current: offset.unwrap_or_else(|| Gf4Vector::zero(n)),
            done: false,
        }
    }
}

impl Iterator for Codewords {
    type Item = Gf4Vector;

    fn next(&mut self) -> Option<Gf4Vector> {
        if self.done {
            return None;
        }
        let out = self.current;
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            let old = self.digits[i] as usize;
            let new = (old + 1) % 4;
            self.current = self.current + self.multiples[i][old] + self.multiples[i][new];
            self.digits[i] = new as u8;
            if new != 0 {
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

/// A Pauli word with an overall sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedPauli {
    pub word: Gf4Vector,
    pub sign: i8,
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{s}{}", self.word.pauli_string())
    }
}

/// Parse failure with a 1-based position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses one code block: `n k` followed by `k` generator rows.
pub fn parse_code(text: &str) -> Result<Gf4Code, ParseError> {
    parse_block(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

fn parse_block<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Gf4Code, ParseError> {
    let mut content = lines.filter(|(_, l)| !strip_comment(l).trim().is_empty());
    let (hline, header) = content
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "missing `n k` header"))?;
    let header = strip_comment(header);
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(ParseError::new(hline, 1, "header must be `n k`"));
    }
    let parse_usize = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| ParseError::new(hline, header.find(s).unwrap_or(0) + 1, format!("bad {what}: {s}")))
    };
    let n = parse_usize(fields[0], "length")?;
    let k = parse_usize(fields[1], "dimension")?;
    if n == 0 || n > MAX_LENGTH {
        return Err(ParseError::new(hline, 1, format!("length must be in 1..=64, got {n}")));
    }
    if k > n {
        return Err(ParseError::new(hline, 1, format!("dimension {k} exceeds length {n}")));
    }
    let mut gens = Vec::with_capacity(k);
    let mut last_line = hline;
    for _ in 0..k {
        let (line_no, raw) = content
            .next()
            .ok_or_else(|| ParseError::new(last_line + 1, 1, format!("expected {k} generator rows")))?;
        last_line = line_no;
        let body = strip_comment(raw);
        let mut entries = Vec::with_capacity(n);
        for (col, c) in body.chars().enumerate() {
            if c.is_whitespace() {
                continue;
            }
            let e = Gf4::from_char(c).ok_or_else(|| {
                ParseError::new(line_no, col + 1, format!("unexpected symbol `{c}`"))
            })?;
            entries.push(e);
        }
        if entries.len() != n {
            return Err(ParseError::new(
                line_no,
                1,
                format!("row has {} symbols, expected {n}", entries.len()),
            ));
        }
        gens.push(Gf4Vector::from_entries(&entries));
    }
    if let Some((line_no, _)) = content.next() {
        return Err(ParseError::new(line_no, 1, "trailing content after generator rows"));
    }
    Gf4Code::new(n, gens).map_err(|e| ParseError::new(hline, 1, e.to_string()))
}

/// Splits a database into blank-line separated blocks and parses each.
pub fn parse_database(text: &str) -> Vec<Result<Gf4Code, ParseError>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
        } else {
            current.push((i + 1, line));
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    blocks
        .into_iter()
        .filter(|b| b.iter().any(|(_, l)| !strip_comment(l).trim().is_empty()))
        .map(|b| parse_block(b.into_iter()))
        .collect()
}
