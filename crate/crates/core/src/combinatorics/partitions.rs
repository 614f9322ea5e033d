use std::fmt;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into decreasing order and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ'_n = #{i : λ_i ≥ n}`.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=first)
                .map(|n| self.parts.iter().filter(|&&p| p >= n).count() as u32)
                .collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=max.min(rest)).rev() {
            prefix.push(k);
            go(rest - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}
