//! Partition and composition enumerators driving the summation formulas.
//!
//! All enumerations are exhaustive, duplicate free and deterministic:
//! partitions come in lexicographic order of their non-decreasing part
//! lists; compositions are grouped by length, lexicographic within a group.

/// A partition into odd parts, stored by multiplicity: `m[i]` counts the
/// part `2i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OddPartition {
    multiplicities: Vec<usize>,
}

impl OddPartition {
    pub fn from_multiplicities(mut multiplicities: Vec<usize>) -> Self {
        while multiplicities.last() == Some(&0) {
            multiplicities.pop();
        }
        OddPartition { multiplicities }
    }

    pub fn from_parts(parts: &[usize]) -> Self {
        let mut m = Vec::new();
        for &p in parts {
            assert!(p % 2 == 1, "odd partitions take odd parts only");
            let i = p / 2;
            if m.len() <= i {
                m.resize(i + 1, 0);
            }
            m[i] += 1;
        }
        Self::from_multiplicities(m)
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Multiplicity of the part `2i + 1`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.multiplicities.get(i).copied().unwrap_or(0)
    }

    /// `n = Σ m_i (2i+1)`.
    pub fn total(&self) -> usize {
        self.multiplicities.iter().enumerate().map(|(i, m)| m * (2 * i + 1)).sum()
    }

    /// `q = Σ m_i`, the number of parts.
    pub fn part_count(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// `k = Σ m_i (i+1)`.
    pub fn weight(&self) -> usize {
        self.multiplicities.iter().enumerate().map(|(i, m)| m * (i + 1)).sum()
    }

    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.part_count());
        for (i, &m) in self.multiplicities.iter().enumerate() {
            parts.extend(std::iter::repeat_n(2 * i + 1, m));
        }
        parts
    }
}

fn partitions_from(
    remaining: usize,
    min_part: usize,
    step: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    let mut part = min_part;
    while part <= remaining {
        prefix.push(part);
        partitions_from(remaining - part, part, step, prefix, out);
        prefix.pop();
        part += step;
    }
}

/// All partitions of `n`, each as a non-decreasing list of parts.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    partitions_from(n, 1, 1, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into odd parts, optionally restricted to exactly
/// `parts` parts.
pub fn odd_partitions(n: usize, parts: Option<usize>) -> Vec<OddPartition> {
    let mut raw = Vec::new();
    partitions_from(n, 1, 2, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .filter(|p| parts.is_none_or(|m| p.len() == m))
        .map(|p| OddPartition::from_parts(&p))
        .collect()
}

fn compositions_of_length(n: usize, len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if len == 0 {
        if n == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if n < len {
        return;
    }
    for first in 1..=n - (len - 1) {
        prefix.push(first);
        compositions_of_length(n - first, len - 1, prefix, out);
        prefix.pop();
    }
}

/// Compositions (ordered tuples of positive parts) of `n`, optionally with
/// exactly `parts` parts.
pub fn compositions(n: usize, parts: Option<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let lengths: Vec<usize> = match parts {
        Some(m) => vec![m],
        None if n == 0 => vec![0],
        None => (1..=n).collect(),
    };
    for len in lengths {
        compositions_of_length(n, len, &mut Vec::new(), &mut out);
    }
    out
}

/// `(part, multiplicity)` pairs of a sorted part list.
pub fn multiplicities(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((q, m)) if *q == p => *m += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}
