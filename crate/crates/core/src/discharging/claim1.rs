//! The three face degree sequences that may end the first phase of the
//! girth-13 argument with negative charge. Entries are vertex degrees along
//! the face; `4` stands for any degree of at least 4.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim1Pattern {
    pub label: char,
    pub sequence: &'static [u8],
}

pub const CLAIM1_PATTERNS: [Claim1Pattern; 3] = [
    Claim1Pattern { label: 'a', sequence: &[4, 2, 2, 2, 4, 2, 2, 2, 4, 2, 2, 3, 2, 2] },
    Claim1Pattern { label: 'b', sequence: &[4, 2, 2, 2, 4, 2, 2, 2, 4, 2, 3, 2, 2] },
    Claim1Pattern { label: 'c', sequence: &[4, 2, 2, 2, 4, 2, 2, 4, 2, 2, 3, 2, 2] },
];

/// Equal as cyclic sequences up to rotation and reflection.
pub(crate) fn cyclic_equal(a: &[u8], b: &[u8]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    if n == 0 {
        return true;
    }
    (0..n).any(|s| (0..n).all(|i| a[(s + i) % n] == b[i]) || (0..n).all(|i| a[(s + n - i) % n] == b[i]))
}

/// Label of the pattern matched by the degree walk of a face, if any.
pub fn claim1_match(degrees: &[usize]) -> Option<char> {
    let clipped: Vec<u8> = degrees.iter().map(|&d| d.min(4) as u8).collect();
    CLAIM1_PATTERNS.iter().find(|p| cyclic_equal(&clipped, p.sequence)).map(|p| p.label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_rotations_and_reflections() {
        let mut s: Vec<usize> = CLAIM1_PATTERNS[1].sequence.iter().map(|&d| d as usize).collect();
        s.rotate_left(5);
        s.reverse();
        s[0] = if s[0] == 4 { 7 } else { s[0] };
        assert_eq!(claim1_match(&s), Some('b'));
        assert_eq!(claim1_match(&[2, 3, 4]), None);
    }

    #[test]
    fn patterns_are_distinct_and_charge_minus_one_third() {
        for (i, p) in CLAIM1_PATTERNS.iter().enumerate() {
            let t3 = p.sequence.iter().filter(|&&d| d == 3).count() as i64;
            let t4 = p.sequence.iter().filter(|&&d| d == 4).count() as i64;
            // 2/3 t3 + t4 - 4 = -1/3
            assert_eq!(2 * t3 + 3 * t4 - 12, -1);
            for q in &CLAIM1_PATTERNS[i + 1..] {
                assert!(!cyclic_equal(p.sequence, q.sequence));
            }
        }
    }
}
