//! Deterministic braid-word corpora for the verification suites: exhaustive
//! enumeration at small size plus seeded random sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;

/// All words over `B_n` of length `0..=max_len`, keeping only those whose
/// closure is a knot.
pub fn exhaustive_knot_closures(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let alphabet: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let mut stack: Vec<Vec<i32>> = vec![vec![]];
    while let Some(word) = stack.pop() {
        let b = BraidWord::new(strands, word.clone()).expect("enumerated word is valid");
        if b.is_knot_closure() {
            out.push(b);
        }
        if word.len() < max_len {
            for &l in &alphabet {
                let mut next = word.clone();
                next.push(l);
                stack.push(next);
            }
        }
    }
    // Stack order is implementation detail; sort for a stable corpus.
    out.sort_by(|a, b| (a.len(), a.letters()).cmp(&(b.len(), b.letters())));
    out
}

/// The exhaustive small corpus used by the verification suites: every
/// knot-closure word of length at most 6 in `B_2` and `B_3`.
pub fn small_knot_corpus() -> Vec<BraidWord> {
    let mut out = exhaustive_knot_closures(2, 6);
    out.extend(exhaustive_knot_closures(3, 6));
    out
}

/// Seeded random words (no closure constraint) with `2..=max_strands` strands
/// and `1..=max_len` letters.
pub fn random_words(seed: u64, count: usize, max_strands: usize, max_len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        out.push(random_word(&mut rng, max_strands, max_len));
    }
    out
}

/// Seeded random knot-closure words. Words whose closure has several
/// components are repaired by appending positive generators that merge
/// cycles of the underlying permutation (always possible, so nothing is
/// discarded and the corpus size is exact).
pub fn random_knot_closures(
    seed: u64,
    count: usize,
    max_strands: usize,
    max_len: usize,
) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let w = random_word(&mut rng, max_strands, max_len);
        out.push(repair_to_knot(w));
    }
    out
}

fn random_word(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(2..=max_strands.max(2));
    let len = rng.gen_range(1..=max_len.max(1));
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("random letters are in range")
}

/// Appends positive generators joining distinct cycles until the closure is a
/// knot. Deterministic: always the lowest index whose transposition merges
/// two cycles.
pub fn repair_to_knot(word: BraidWord) -> BraidWord {
    let mut w = word;
    while !w.is_knot_closure() {
        let perm = w.closure_permutation();
        let n = w.strands();
        let cycle_id = cycle_ids(&perm, n);
        let j = (0..n - 1)
            .find(|&j| cycle_id[j] != cycle_id[j + 1])
            .expect("a non-full-cycle permutation has adjacent symbols in distinct cycles");
        let appended = BraidWord::new(n, vec![(j + 1) as i32]).unwrap();
        w = w.concat(&appended).unwrap();
    }
    w
}

fn cycle_ids(perm: &crate::braid::Permutation, n: usize) -> Vec<usize> {
    let mut id = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if id[start] != usize::MAX {
            continue;
        }
        let mut x = start;
        while id[x] == usize::MAX {
            id[x] = next;
            x = perm.image(x);
        }
        next += 1;
    }
    id
}
