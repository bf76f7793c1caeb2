//! Exact arithmetic in the circle group, written additively as R/Z.
//!
//! A [`Phase`] is a "turn": the additive value `a/b mod 1` stands for the
//! complex unit `exp(2*pi*i*a/b)`. Beyond rationals, a phase may carry a
//! rational-coefficient combination of formal symbols. Symbols are treated
//! as Q-linearly independent of 1 and of each other (the genericity
//! convention), which keeps equality of phases decidable.
//!
//! All values are immutable and all operations are pure.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An element of the subgroup of R/Z generated by the rationals and finitely
/// many formal symbols.
///
/// Canonical form: the rational part lies in `[0, 1)` and the symbol map
/// contains no zero coefficients. Two phases are equal iff their canonical
/// forms are field-identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    rational: BigRational,
    symbols: BTreeMap<String, BigRational>,
}

fn mod_one(r: BigRational) -> BigRational {
    &r - r.floor()
}

impl Phase {
    /// The identity element 0.
    pub fn zero() -> Self {
        Phase {
            rational: BigRational::zero(),
            symbols: BTreeMap::new(),
        }
    }

    /// The turn `num/den` reduced modulo 1. Panics if `den == 0`.
    pub fn from_fraction(num: i64, den: i64) -> Self {
        Phase::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// A purely rational phase, canonicalized into `[0, 1)`.
    pub fn from_rational(r: BigRational) -> Self {
        Phase {
            rational: mod_one(r),
            symbols: BTreeMap::new(),
        }
    }

    /// The formal symbol `name` with coefficient 1.
    pub fn symbol(name: &str) -> Self {
        Phase::symbol_term(name, BigRational::one())
    }

    /// The formal symbol `name` scaled by `coeff`.
    pub fn symbol_term(name: &str, coeff: BigRational) -> Self {
        assert!(!name.is_empty(), "symbol names must be nonempty");
        let mut symbols = BTreeMap::new();
        if !coeff.is_zero() {
            symbols.insert(name.to_owned(), coeff);
        }
        Phase {
            rational: BigRational::zero(),
            symbols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.symbols.is_empty()
    }

    /// True when the phase has no symbol part.
    pub fn is_rational(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The canonical rational part, in `[0, 1)`.
    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    /// Denominator of the rational part (1 for integral phases).
    pub fn denominator(&self) -> BigInt {
        self.rational.denom().clone()
    }

    /// Symbol coefficients in name order.
    pub fn symbol_terms(&self) -> impl Iterator<Item = (&str, &BigRational)> {
        self.symbols.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Coefficient of one symbol (zero if absent).
    pub fn symbol_coeff(&self, name: &str) -> BigRational {
        self.symbols.get(name).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Group law of T in additive form.
    pub fn add(&self, other: &Phase) -> Phase {
        let mut symbols = self.symbols.clone();
        for (name, coeff) in &other.symbols {
            let entry = symbols.entry(name.clone()).or_insert_with(BigRational::zero);
            *entry += coeff;
        }
        symbols.retain(|_, c| !c.is_zero());
        Phase {
            rational: mod_one(&self.rational + &other.rational),
            symbols,
        }
    }

    /// Additive inverse.
    pub fn neg(&self) -> Phase {
        Phase {
            rational: mod_one(-&self.rational),
            symbols: self.symbols.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn sub(&self, other: &Phase) -> Phase {
        self.add(&other.neg())
    }

    /// The `m`-fold sum of `self`; `scale(0)` is the identity.
    pub fn scale(&self, m: i64) -> Phase {
        let factor = BigRational::from_integer(BigInt::from(m));
        let mut symbols: BTreeMap<String, BigRational> = self
            .symbols
            .iter()
            .map(|(k, v)| (k.clone(), v * &factor))
            .collect();
        symbols.retain(|_, c| !c.is_zero());
        Phase {
            rational: mod_one(&self.rational * &factor),
            symbols,
        }
    }

    /// All `m` solutions `x` of `m * x = self` in the supported subgroup,
    /// as `x_k = (rational + k)/m` for `k = 0..m-1` with every symbol
    /// coefficient divided exactly by `m`.
    ///
    /// The symbol span is a divisible rational vector space, so the symbol
    /// part of a root is unique; only the rational part branches.
    pub fn roots(&self, m: u32) -> Vec<Phase> {
        assert!(m >= 1, "root count must be positive");
        let m_rat = BigRational::from_integer(BigInt::from(m));
        let symbols: BTreeMap<String, BigRational> = self
            .symbols
            .iter()
            .map(|(k, v)| (k.clone(), v / &m_rat))
            .collect();
        (0..m)
            .map(|k| {
                let shifted = &self.rational + BigRational::from_integer(BigInt::from(k));
                Phase {
                    rational: mod_one(shifted / &m_rat),
                    symbols: symbols.clone(),
                }
            })
            .collect()
    }

    /// Parses the textual form produced by [`Display`](fmt::Display):
    /// a `+`/`-` separated list of rational terms (`1/2`, `3`) and symbol
    /// terms (`t`, `(1/6)t`, `(2)s`).
    pub fn parse(text: &str) -> Result<Phase> {
        PhaseParser::new(text).parse()
    }
}

fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.rational.is_zero() || self.symbols.is_empty() {
            write!(f, "{}", rational_str(&self.rational))?;
            wrote = true;
        }
        for (name, coeff) in &self.symbols {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if wrote {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            } else if negative {
                write!(f, "-")?;
            }
            if magnitude.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "({}){}", rational_str(&magnitude), name)?;
            }
            wrote = true;
        }
        Ok(())
    }
}

impl Serialize for Phase {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Phase::parse(&text).map_err(serde::de::Error::custom)
    }
}

struct PhaseParser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> PhaseParser<'a> {
    fn new(text: &'a str) -> Self {
        PhaseParser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::PhaseSyntax {
            text: self.text.to_owned(),
            message: format!("{message} (at offset {})", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(&mut self) -> Result<Phase> {
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return Err(self.error("empty phase"));
        }
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
            self.skip_ws();
        } else if self.eat(b'+') {
            self.skip_ws();
        }
        let mut acc = self.parse_term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    let term = self.parse_term()?;
                    acc = acc.add(&term);
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    let term = self.parse_term()?;
                    acc = acc.sub(&term);
                }
                Some(_) => return Err(self.error("expected `+`, `-`, or end of phase")),
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Phase> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let coeff = self.parse_rational()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.error("expected `)` after symbol coefficient"));
                }
                self.skip_ws();
                let name = self.parse_ident()?;
                Ok(Phase::symbol_term(&name, coeff))
            }
            Some(c) if c.is_ascii_digit() => {
                let value = self.parse_rational()?;
                Ok(Phase::from_rational(value))
            }
            Some(c) if c == b'_' || c.is_ascii_alphabetic() => {
                let name = self.parse_ident()?;
                Ok(Phase::symbol(&name))
            }
            _ => Err(self.error("expected a rational, `(coeff)symbol`, or symbol")),
        }
    }

    fn parse_rational(&mut self) -> Result<BigRational> {
        let numer = self.parse_int()?;
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let denom = self.parse_int()?;
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn parse_int(&mut self) -> Result<BigInt> {
        let negative = self.eat(b'-');
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        let digits = &self.text[start..self.pos];
        let mut value: BigInt = digits.parse().expect("digits parse as BigInt");
        if negative {
            value = -value;
        }
        Ok(value)
    }

    fn parse_ident(&mut self) -> Result<String> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c == b'_' || c.is_ascii_alphabetic()) {
            return Err(self.error("expected a symbol name"));
        }
        while matches!(self.peek(), Some(c) if c == b'_' || c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        Ok(self.text[start..self.pos].to_owned())
    }
}

/// A square matrix of phases that is additively skew with zero diagonal:
/// `entries[j][i] = -entries[i][j]` and `entries[i][i] = 0`.
///
/// Houses both the twist matrices z/rho (multiplicative convention
/// `z = exp(2*pi*i*theta)`) and the angle matrix theta itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PhaseMatrixRaw", into = "PhaseMatrixRaw")]
pub struct PhaseMatrix {
    n: usize,
    entries: Vec<Phase>,
}

impl PhaseMatrix {
    /// The zero matrix of size `n >= 1`.
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatrix("size must be at least 1".into()));
        }
        Ok(PhaseMatrix {
            n,
            entries: vec![Phase::zero(); n * n],
        })
    }

    /// Builds a skew matrix from strictly-upper-triangular entries
    /// (0-based `i < j`); the lower triangle and diagonal are derived, so
    /// skewness is unrepresentable rather than checked.
    pub fn from_upper(n: usize, upper: &[(usize, usize, Phase)]) -> Result<Self> {
        let mut matrix = PhaseMatrix::zero(n)?;
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, phase) in upper {
            if *i >= *j || *j >= n {
                return Err(Error::InvalidMatrix(format!(
                    "entry ({i}, {j}) is not strictly upper triangular for size {n}"
                )));
            }
            if !seen.insert((*i, *j)) {
                return Err(Error::InvalidMatrix(format!("duplicate entry ({i}, {j})")));
            }
            matrix.entries[i * n + j] = phase.clone();
            matrix.entries[j * n + i] = phase.neg();
        }
        Ok(matrix)
    }

    /// Validates a full matrix of rows for skewness and zero diagonal.
    pub fn from_rows(rows: Vec<Vec<Phase>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("size must be at least 1".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has length {} in a matrix of size {n}",
                    row.len()
                )));
            }
        }
        for i in 0..n {
            if !rows[i][i].is_zero() {
                return Err(Error::InvalidMatrix(format!("diagonal entry ({i}, {i}) is nonzero")));
            }
            for j in (i + 1)..n {
                if rows[j][i] != rows[i][j].neg() {
                    return Err(Error::InvalidMatrix(format!(
                        "entries ({i}, {j}) and ({j}, {i}) are not additive opposites"
                    )));
                }
            }
        }
        Ok(PhaseMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Phase {
        &self.entries[i * self.n + j]
    }

    /// Overwrites the upper entry `(i, j)`, `i < j`, keeping skewness.
    pub fn set_upper(&mut self, i: usize, j: usize, phase: Phase) -> Result<()> {
        if i >= j || j >= self.n {
            return Err(Error::InvalidMatrix(format!(
                "entry ({i}, {j}) is not strictly upper triangular for size {}",
                self.n
            )));
        }
        self.entries[j * self.n + i] = phase.neg();
        self.entries[i * self.n + j] = phase;
        Ok(())
    }

    /// Strictly-upper-triangular entries in row-major order.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, &Phase)> {
        let n = self.n;
        (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j, self.entry(i, j))))
    }

    /// True when every entry is purely rational.
    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(Phase::is_rational)
    }

    /// Names of all symbols occurring anywhere in the matrix, sorted.
    pub fn symbol_names(&self) -> Vec<String> {
        let mut names = std::collections::BTreeSet::new();
        for entry in &self.entries {
            for (name, _) in entry.symbol_terms() {
                names.insert(name.to_owned());
            }
        }
        names.into_iter().collect()
    }

    /// Least common multiple of the rational-part denominators (1 for the
    /// zero matrix).
    pub fn common_denominator(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::one(), |acc, p| acc.lcm(&p.denominator()))
    }

    /// Parses the `.phm` format: a `n=<int>` header followed by one
    /// strictly-upper-triangular entry `i j PHASE` per line (1-based,
    /// `i < j`); omitted entries are zero and `#` starts a comment.
    pub fn parse_phm(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut upper = Vec::new();
        for (line_no, raw_line) in text.lines().enumerate() {
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no + 1,
                col: 1,
                message,
            };
            if let Some(rest) = line.strip_prefix("n=") {
                if n.is_some() {
                    return Err(err("duplicate `n=` header".into()));
                }
                let size: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("invalid matrix size `{}`", rest.trim())))?;
                if size == 0 {
                    return Err(err("matrix size must be at least 1".into()));
                }
                n = Some(size);
                continue;
            }
            let size = n.ok_or_else(|| err("entry before `n=<int>` header".into()))?;
            let mut parts = line.splitn(3, char::is_whitespace);
            let i_text = parts.next().unwrap_or_default();
            let j_text = parts.next().unwrap_or_default();
            let phase_text = parts.next().unwrap_or_default().trim();
            let i: usize = i_text
                .parse()
                .map_err(|_| err(format!("invalid row index `{i_text}`")))?;
            let j: usize = j_text
                .parse()
                .map_err(|_| err(format!("invalid column index `{j_text}`")))?;
            if i < 1 || j < 1 || i > size || j > size {
                return Err(err(format!("indices ({i}, {j}) out of range for n={size}")));
            }
            if i >= j {
                return Err(err(format!(
                    "entry ({i}, {j}) is not strictly upper triangular; only i < j may be given"
                )));
            }
            if phase_text.is_empty() {
                return Err(err("missing phase".into()));
            }
            let phase = Phase::parse(phase_text).map_err(|e| err(e.to_string()))?;
            upper.push((i - 1, j - 1, phase));
        }
        let size = n.ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            message: "missing `n=<int>` header".into(),
        })?;
        PhaseMatrix::from_upper(size, &upper)
    }

    /// Emits the `.phm` format (nonzero upper entries only).
    pub fn to_phm(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for (i, j, phase) in self.upper_entries() {
            if !phase.is_zero() {
                out.push_str(&format!("{} {} {}\n", i + 1, j + 1, phase));
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct PhaseMatrixRaw {
    n: usize,
    upper: Vec<(usize, usize, String)>,
}

impl From<PhaseMatrix> for PhaseMatrixRaw {
    fn from(matrix: PhaseMatrix) -> Self {
        let upper = matrix
            .upper_entries()
            .filter(|(_, _, phase)| !phase.is_zero())
            .map(|(i, j, phase)| (i + 1, j + 1, phase.to_string()))
            .collect();
        PhaseMatrixRaw { n: matrix.n, upper }
    }
}

impl TryFrom<PhaseMatrixRaw> for PhaseMatrix {
    type Error = Error;

    fn try_from(raw: PhaseMatrixRaw) -> Result<Self> {
        let mut upper = Vec::with_capacity(raw.upper.len());
        for (i, j, text) in raw.upper {
            if i < 1 || j < 1 {
                return Err(Error::InvalidMatrix(format!(
                    "serialized entries are 1-based, got ({i}, {j})"
                )));
            }
            upper.push((i - 1, j - 1, Phase::parse(&text)?));
        }
        PhaseMatrix::from_upper(raw.n, &upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ph(num: i64, den: i64) -> Phase {
        Phase::from_fraction(num, den)
    }

    #[test]
    fn add_reduces_modulo_one() {
        assert_eq!(ph(1, 2).add(&ph(3, 4)), ph(1, 4));
    }

    #[test]
    fn zero_is_identity() {
        let x = ph(2, 7).add(&Phase::symbol("t"));
        assert_eq!(Phase::zero().add(&x), x);
    }

    #[test]
    fn inverses_cancel() {
        let a = ph(1, 3).add(&Phase::symbol("t"));
        let b = ph(2, 3).add(&Phase::symbol("t").neg());
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn scale_examples() {
        assert!(ph(1, 4).scale(4).is_zero());
        assert_eq!(ph(1, 8).scale(4), ph(1, 2));
        assert_eq!(
            Phase::symbol("t").scale(3),
            Phase::symbol_term("t", BigRational::from_integer(3.into()))
        );
        assert!(ph(5, 7).scale(0).is_zero());
    }

    #[test]
    fn scale_matches_repeated_addition() {
        let a = ph(3, 8).add(&Phase::symbol_term("t", BigRational::new(2.into(), 5.into())));
        let mut acc = Phase::zero();
        for m in 0..12i64 {
            assert_eq!(a.scale(m), acc, "scale by {m}");
            acc = acc.add(&a);
        }
        assert_eq!(a.scale(-3), a.scale(3).neg());
    }

    #[test]
    fn roots_of_one_half_are_quarter_turns() {
        assert_eq!(ph(1, 2).roots(2), vec![ph(1, 4), ph(3, 4)]);
    }

    #[test]
    fn roots_trivial_and_thirds() {
        assert_eq!(Phase::zero().roots(1), vec![Phase::zero()]);
        assert_eq!(ph(1, 3).roots(3), vec![ph(1, 9), ph(4, 9), ph(7, 9)]);
    }

    #[test]
    fn roots_scale_back_and_are_distinct() {
        let a = ph(5, 12).add(&Phase::symbol_term("s", BigRational::new(3.into(), 4.into())));
        for m in 1..=9u32 {
            let roots = a.roots(m);
            assert_eq!(roots.len(), m as usize);
            for r in &roots {
                assert_eq!(r.scale(m as i64), a);
            }
            let distinct: std::collections::HashSet<_> = roots.iter().cloned().collect();
            assert_eq!(distinct.len(), m as usize);
        }
    }

    #[test]
    fn rational_phases_form_cyclic_groups() {
        // Denominator-D phases form a cyclic group of order D under addition.
        for d in 1..=24i64 {
            let gen = ph(1, d);
            let mut acc = Phase::zero();
            for step in 1..=d {
                acc = acc.add(&gen);
                if step < d {
                    assert!(!acc.is_zero(), "1/{d} has order {d}, not {step}");
                }
            }
            assert!(acc.is_zero(), "d * (1/{d}) must vanish");
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let cases = vec![
            Phase::zero(),
            ph(1, 2),
            ph(7, 12),
            Phase::symbol("t"),
            Phase::symbol("t").neg(),
            ph(1, 6).add(&Phase::symbol_term("t", BigRational::new(1.into(), 6.into()))),
            ph(3, 4)
                .add(&Phase::symbol_term("alpha", BigRational::new((-5).into(), 3.into())))
                .add(&Phase::symbol_term("beta", BigRational::from_integer(2.into()))),
        ];
        for phase in cases {
            let text = phase.to_string();
            let back = Phase::parse(&text).unwrap_or_else(|e| panic!("parsing `{text}`: {e}"));
            assert_eq!(back, phase, "round trip through `{text}`");
        }
    }

    #[test]
    fn parse_accepts_loose_input() {
        assert_eq!(Phase::parse("-1/4").unwrap(), ph(3, 4));
        assert_eq!(Phase::parse("5/4").unwrap(), ph(1, 4));
        assert_eq!(Phase::parse(" 1/3 + t - t ").unwrap(), ph(1, 3));
        assert_eq!(
            Phase::parse("-(1/6)t").unwrap(),
            Phase::symbol_term("t", BigRational::new((-1).into(), 6.into()))
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/0", "t +", "(1/2", "1..2", "+", "3 4"] {
            assert!(Phase::parse(bad).is_err(), "`{bad}` should not parse");
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let p = ph(9, 4).add(&Phase::symbol_term("t", BigRational::new(2.into(), 6.into())));
        let again = Phase::parse(&p.to_string()).unwrap();
        assert_eq!(p, again);
        assert_eq!(p.to_string(), again.to_string());
    }

    #[test]
    fn phase_matrix_from_upper_is_skew() {
        let m = PhaseMatrix::from_upper(3, &[(0, 1, ph(1, 4)), (1, 2, Phase::symbol("t"))]).unwrap();
        assert_eq!(m.entry(1, 0), &ph(3, 4));
        assert_eq!(m.entry(2, 1), &Phase::symbol("t").neg());
        assert!(m.entry(0, 2).is_zero());
        for i in 0..3 {
            assert!(m.entry(i, i).is_zero());
        }
    }

    #[test]
    fn phase_matrix_rejects_bad_shapes() {
        assert!(PhaseMatrix::zero(0).is_err());
        assert!(PhaseMatrix::from_upper(2, &[(1, 1, ph(1, 2))]).is_err());
        assert!(PhaseMatrix::from_upper(2, &[(0, 1, ph(1, 2)), (0, 1, ph(1, 3))]).is_err());
        let rows = vec![
            vec![Phase::zero(), ph(1, 4)],
            vec![ph(1, 4), Phase::zero()],
        ];
        assert!(PhaseMatrix::from_rows(rows).is_err());
    }

    #[test]
    fn phm_round_trip() {
        let m = PhaseMatrix::from_upper(
            3,
            &[(0, 1, ph(1, 2)), (0, 2, Phase::symbol("t")), (1, 2, ph(5, 6))],
        )
        .unwrap();
        let text = m.to_phm();
        let back = PhaseMatrix::parse_phm(&text).unwrap();
        assert_eq!(back, m);

        let with_comment = "# example\nn=2\n1 2 1/2\n";
        let parsed = PhaseMatrix::parse_phm(with_comment).unwrap();
        assert_eq!(parsed.entry(0, 1), &ph(1, 2));
    }

    #[test]
    fn phm_rejects_malformed_input() {
        for bad in [
            "1 2 1/2\n",
            "n=2\n2 1 1/2\n",
            "n=2\n1 1 1/2\n",
            "n=2\n1 3 1/2\n",
            "n=0\n",
            "n=2\n1 2\n",
        ] {
            assert!(PhaseMatrix::parse_phm(bad).is_err(), "`{bad}` should fail");
        }
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = PhaseMatrix::from_upper(2, &[(0, 1, ph(1, 2).add(&Phase::symbol("t")))]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        let back: PhaseMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }
}
