//! Exact cover by 4-sets.

use std::fmt;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{PebbleError, Result};

/// A universe `{0, .., 4n-1}` and `m >= n` four-element subsets of it.
///
/// Elements and sets are 0-based here; the text format is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X4CInstance {
    n: usize,
    sets: Vec<[usize; 4]>,
}

impl X4CInstance {
    pub fn new(n: usize, sets: Vec<[usize; 4]>) -> Result<Self> {
        if n == 0 {
            return Err(PebbleError::MalformedInstance("n must be positive".into()));
        }
        if sets.len() < n {
            return Err(PebbleError::MalformedInstance(format!("m = {} is smaller than n = {n}", sets.len())));
        }
        let mut sorted = Vec::with_capacity(sets.len());
        for (i, set) in sets.into_iter().enumerate() {
            let mut s = set;
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(PebbleError::MalformedInstance(format!("set {} repeats an element", i + 1)));
            }
            if s[3] >= 4 * n {
                return Err(PebbleError::MalformedInstance(format!(
                    "set {} has element {} outside 1..={}",
                    i + 1,
                    s[3] + 1,
                    4 * n
                )));
            }
            sorted.push(s);
        }
        Ok(Self { n, sets: sorted })
    }

    /// Builds an instance from 1-based element labels.
    pub fn from_one_based(n: usize, sets: &[[usize; 4]]) -> Result<Self> {
        let mut zero = Vec::with_capacity(sets.len());
        for (i, set) in sets.iter().enumerate() {
            if set.contains(&0) {
                return Err(PebbleError::MalformedInstance(format!("set {} uses element 0; elements are 1-based", i + 1)));
            }
            zero.push(set.map(|e| e - 1));
        }
        Self::new(n, zero)
    }

    /// `m` distinct-element sets drawn uniformly from the universe.
    pub fn random<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Self> {
        let sets = (0..m)
            .map(|_| {
                let idx = sample(rng, 4 * n, 4);
                [idx.index(0), idx.index(1), idx.index(2), idx.index(3)]
            })
            .collect();
        Self::new(n, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn universe_size(&self) -> usize {
        4 * self.n
    }

    pub fn sets(&self) -> &[[usize; 4]] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[usize; 4] {
        &self.sets[i]
    }

    /// Whether the chosen set indices partition the universe.
    pub fn is_exact_cover(&self, cover: &[usize]) -> bool {
        if cover.len() != self.n || cover.iter().any(|&i| i >= self.m()) {
            return false;
        }
        let mut seen = vec![false; self.universe_size()];
        for &i in cover {
            for &e in &self.sets[i] {
                if std::mem::replace(&mut seen[e], true) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub(crate) fn check_cover(&self, cover: &[usize]) -> Result<()> {
        if self.is_exact_cover(cover) {
            Ok(())
        } else {
            Err(PebbleError::NotACover)
        }
    }

    /// Parses the text format: `n m` on the first line, then `m` lines of
    /// four 1-based elements. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let bad = |line: usize, what: &str| PebbleError::MalformedInstance(format!("line {line}: {what}"));
        let (line, header) = lines.next().ok_or_else(|| bad(1, "missing \"n m\" header"))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad(line, "expected two non-negative integers"))?;
        let [n, m] = nums[..] else {
            return Err(bad(line, "expected exactly two integers \"n m\""));
        };
        let mut sets = Vec::with_capacity(m);
        for (line, text) in lines {
            let nums: Vec<usize> = text
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad(line, "expected four positive integers"))?;
            let set: [usize; 4] = nums.try_into().map_err(|_| bad(line, "expected exactly four elements"))?;
            sets.push(set);
        }
        if sets.len() != m {
            return Err(PebbleError::MalformedInstance(format!("header declares {m} sets but {} were given", sets.len())));
        }
        Self::from_one_based(n, &sets)
    }
}

impl fmt::Display for X4CInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.m())?;
        for s in &self.sets {
            writeln!(f, "{} {} {} {}", s[0] + 1, s[1] + 1, s[2] + 1, s[3] + 1)?;
        }
        Ok(())
    }
}

/// Finds an exact cover by backtracking on the lowest uncovered element,
/// trying sets in index order. Returns ascending set indices.
pub fn x4c_solve(inst: &X4CInstance) -> Option<Vec<usize>> {
    let mut covering: Vec<Vec<usize>> = vec![Vec::new(); inst.universe_size()];
    for (i, set) in inst.sets().iter().enumerate() {
        for &e in set {
            covering[e].push(i);
        }
    }
    let mut used = vec![false; inst.universe_size()];
    let mut chosen = Vec::with_capacity(inst.n());
    if backtrack(inst, &covering, &mut used, &mut chosen) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

fn backtrack(inst: &X4CInstance, covering: &[Vec<usize>], used: &mut [bool], chosen: &mut Vec<usize>) -> bool {
    let Some(e) = used.iter().position(|&u| !u) else {
        return true;
    };
    for &i in &covering[e] {
        let set = inst.set(i);
        if set.iter().any(|&x| used[x]) {
            continue;
        }
        for &x in set {
            used[x] = true;
        }
        chosen.push(i);
        if backtrack(inst, covering, used, chosen) {
            return true;
        }
        chosen.pop();
        for &x in set {
            used[x] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sample_instance() -> X4CInstance {
        X4CInstance::from_one_based(2, &[[1, 2, 3, 4], [3, 4, 5, 6], [5, 6, 7, 8]]).unwrap()
    }

    fn no_cover_instance() -> X4CInstance {
        X4CInstance::from_one_based(2, &[[1, 2, 3, 4], [3, 4, 5, 6], [4, 5, 7, 8]]).unwrap()
    }

    /// Every n-subset of the sets, checked directly.
    fn brute_force_has_cover(inst: &X4CInstance) -> bool {
        let m = inst.m();
        (0u32..1 << m)
            .filter(|mask| mask.count_ones() as usize == inst.n())
            .any(|mask| {
                let cover: Vec<_> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
                inst.is_exact_cover(&cover)
            })
    }

    #[test]
    fn solve_examples() {
        assert_eq!(x4c_solve(&sample_instance()), Some(vec![0, 2]));
        let single = X4CInstance::from_one_based(1, &[[1, 2, 3, 4]]).unwrap();
        assert_eq!(x4c_solve(&single), Some(vec![0]));
        assert!(!brute_force_has_cover(&no_cover_instance()));
        assert_eq!(x4c_solve(&no_cover_instance()), None);
    }

    #[test]
    fn solver_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=3);
            let m = rng.gen_range(n..=n + 5);
            let inst = X4CInstance::random(n, m, &mut rng).unwrap();
            let found = x4c_solve(&inst);
            assert_eq!(found.is_some(), brute_force_has_cover(&inst), "{inst}");
            if let Some(cover) = found {
                assert!(inst.is_exact_cover(&cover));
            }
        }
    }

    #[test]
    fn validation() {
        assert!(X4CInstance::from_one_based(2, &[[1, 2, 3, 4]]).is_err());
        assert!(X4CInstance::from_one_based(1, &[[1, 2, 3, 3]]).is_err());
        assert!(X4CInstance::from_one_based(1, &[[1, 2, 3, 5]]).is_err());
        assert!(X4CInstance::from_one_based(1, &[[0, 1, 2, 3]]).is_err());
        assert!(X4CInstance::new(0, vec![]).is_err());
    }

    #[test]
    fn cover_check() {
        let inst = sample_instance();
        assert!(inst.is_exact_cover(&[0, 2]));
        assert!(!inst.is_exact_cover(&[0, 1]));
        assert!(!inst.is_exact_cover(&[0]));
        assert!(!inst.is_exact_cover(&[0, 7]));
    }

    #[test]
    fn text_format() {
        let inst = sample_instance();
        let text = inst.to_string();
        assert_eq!(text, "2 3\n1 2 3 4\n3 4 5 6\n5 6 7 8\n");
        assert_eq!(X4CInstance::parse(&text).unwrap(), inst);
        let err = X4CInstance::parse("2 3\n1 2 3 4\n3 4 x 6\n5 6 7 8\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        assert!(X4CInstance::parse("2 3\n1 2 3 4\n").is_err());
        assert!(X4CInstance::parse("# comment\n1 1\n\n4 3 2 1 # trailing\n").is_ok());
    }
}
