//! Bounded word enumeration in shortlex order.

use super::alphabet::{Alphabet, Word};

/// All words of length ≤ `max_len` in shortlex order: by length first,
/// then lexicographically by alphabet order. The result has exactly
/// `Σ_{i=0}^{max_len} |Σ|^i` entries.
pub fn enumerate_words(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer: Vec<Vec<char>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &s in alphabet.symbols() {
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(syms: &[char], len: usize) -> Vec<String> {
        let a = Alphabet::new(syms.to_vec()).unwrap();
        enumerate_words(&a, len)
            .iter()
            .map(|w| w.to_string())
            .collect()
    }

    #[test]
    fn unary_up_to_two() {
        assert_eq!(words(&['a'], 2), vec!["", "a", "aa"]);
    }

    #[test]
    fn binary_length_one() {
        assert_eq!(words(&['0', '1'], 1), vec!["", "0", "1"]);
    }

    #[test]
    fn binary_length_three_is_geometric_sum() {
        let ws = words(&['0', '1'], 3);
        assert_eq!(ws.len(), 1 + 2 + 4 + 8);
        assert_eq!(&ws[..4], &["", "0", "1", "00"]);
    }
}
