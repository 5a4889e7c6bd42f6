//! Braid words, their combinatorial invariants, knot-closure validation, and
//! the cabling construction.

use std::fmt;

use crate::error::{Error, Result};

/// A word in the braid group `B_n`.
///
/// Letters are signed Artin generator indices: letter `i > 0` is the positive
/// crossing of strands `i, i+1`; letter `-i` is its inverse. Every index
/// satisfies `1 <= |letter| <= strands - 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// A permutation of `{0, .., n-1}` stored as an image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { map: self.map.iter().map(|&i| other.map[i]).collect() }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.map[x];
            }
        }
        cycles
    }

    /// True iff the permutation is a single cycle through all symbols.
    pub fn is_full_cycle(&self) -> bool {
        self.cycle_count() == 1
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::Precondition("strand count must be at least 1".into()));
        }
        for (pos, &l) in letters.iter().enumerate() {
            if l == 0 {
                return Err(Error::Parse {
                    position: pos + 1,
                    message: "0 is not a generator index".into(),
                });
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::Parse {
                    position: pos + 1,
                    message: format!("generator {l} out of range for {strands} strands"),
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses a whitespace-separated list of signed generator indices, e.g.
    /// `"1 -2 1 -2"`. When `strands` is absent it is inferred as
    /// `max|letter| + 1` (1 for the empty word).
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for (pos, tok) in text.split_whitespace().enumerate() {
            let l: i32 = tok.parse().map_err(|_| Error::Parse {
                position: pos + 1,
                message: format!("`{tok}` is not an integer"),
            })?;
            letters.push(l);
        }
        let inferred = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
        Self::new(strands.unwrap_or(inferred), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs; a group homomorphism to the integers.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum()
    }

    /// Underlying permutation of the strands, composing the transposition
    /// `(|l|-1, |l|)` of each letter in word order.
    pub fn closure_permutation(&self) -> Permutation {
        let mut map: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for x in map.iter_mut() {
                if *x == i {
                    *x = i + 1;
                } else if *x == i + 1 {
                    *x = i;
                }
            }
        }
        Permutation { map }
    }

    /// True iff the closure of the braid is a knot (one component), i.e. the
    /// underlying permutation is a single `n`-cycle.
    pub fn is_knot_closure(&self) -> bool {
        self.closure_permutation().is_full_cycle()
    }

    /// Word with all crossing signs flipped (the mirror braid).
    pub fn mirror(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| -l).collect(),
        }
    }

    /// Group inverse: reversed word with flipped signs.
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::Dimension(format!(
                "cannot concatenate words on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Conjugate `a * self * a^{-1}` (same strand count required).
    pub fn conjugated_by(&self, a: &Self) -> Result<Self> {
        a.concat(self)?.concat(&a.inverse())
    }

    /// Markov stabilization: the same word viewed in `B_{n+1}` with `sigma_n`
    /// (positive or negative) appended. Preserves the closure knot.
    pub fn stabilized(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// The `m`-strand cable: each strand is replaced by a ribbon of `m`
    /// parallel strands and the ribbon is closed into a single knot.
    ///
    /// Construction: every letter becomes the block transposition exchanging
    /// the two adjacent `m`-ribbons (m passes, each moving one strand across
    /// the neighbouring block, all crossings carrying the letter's sign);
    /// then `exponent_sum` full twists are removed from the first ribbon so
    /// the cable follows the zero framing rather than the diagram framing;
    /// finally the cycling word `sigma_1^{-1} .. sigma_{m-1}^{-1}` joins the
    /// `m` parallel components into one.
    ///
    /// The result closes to a knot whenever `self` does (single `n*m`-cycle).
    pub fn cable(&self, m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::Precondition("cable multiplicity must be at least 1".into()));
        }
        if !self.is_knot_closure() {
            let components = self.closure_permutation().cycle_count();
            return Err(Error::NotKnotClosure { components });
        }
        let n = self.strands;
        let mut letters: Vec<i32> = Vec::new();
        for &l in &self.letters {
            letters.extend(block_transposition(l.unsigned_abs() as usize, m, l > 0));
        }
        // Framing compensation: the blocked word carries one extra full twist
        // of the ribbon per unit of writhe.
        let g = self.exponent_sum();
        let twist = full_twist(m);
        for _ in 0..g.unsigned_abs() {
            if g > 0 {
                letters.extend(twist.iter().rev().map(|&x| -x));
            } else {
                letters.extend_from_slice(&twist);
            }
        }
        // Cycling word on the first ribbon, first strand passing under.
        for j in 1..m {
            letters.push(-(j as i32));
        }
        let cabled = BraidWord { strands: n * m, letters };
        if !cabled.is_knot_closure() {
            return Err(Error::InternalConsistency(
                "cable construction did not produce a single-cycle closure".into(),
            ));
        }
        Ok(cabled)
    }
}

/// Word exchanging the adjacent `m`-strand blocks `i` and `i+1` (1-based),
/// with every crossing positive when `positive` holds, else the exact inverse
/// word. Built as `m` passes, each carrying one strand across the block.
fn block_transposition(i: usize, m: usize, positive: bool) -> Vec<i32> {
    let p = (i - 1) * m;
    let mut word = Vec::with_capacity(m * m);
    for pass in 0..m {
        for b in 0..m {
            word.push((p + m - pass + b) as i32);
        }
    }
    if !positive {
        word = word.into_iter().rev().map(|x| -x).collect();
    }
    word
}

/// One positive full twist of an `m`-strand ribbon: `(sigma_1 .. sigma_{m-1})^m`.
fn full_twist(m: usize) -> Vec<i32> {
    let mut word = Vec::with_capacity(m.saturating_sub(1) * m);
    for _ in 0..m {
        for j in 1..m {
            word.push(j as i32);
        }
    }
    word
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(B{}: {})", self.strands, self)
    }
}
