//! Unordered partitions of `n`.

/// Iterator over the partitions of `n` as nonincreasing lists, in reverse
/// lexicographic order: `[n]` first, `[1, …, 1]` last.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    /// `n = 0` yields nothing.
    pub fn new(n: u32) -> Self {
        Partitions {
            current: (n > 0).then(|| vec![n]),
        }
    }
}

impl Iterator for Partitions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        // strip trailing ones, then lower the last part above one and refill
        let mut ones = 0u32;
        while next.last() == Some(&1) {
            next.pop();
            ones += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            let cap = *last;
            let mut rest = ones + 1;
            while rest > 0 {
                let part = rest.min(cap);
                next.push(part);
                rest -= part;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Parses `3,2,2,1` or the exponent shorthand `3,2^2,1`.
pub fn parse_partition(src: &str) -> Result<Vec<u32>, String> {
    let mut parts = Vec::new();
    for item in src.split(',') {
        let item = item.trim();
        let (base, mult) = match item.split_once('^') {
            Some((b, m)) => (b.trim(), m.trim()),
            None => (item, "1"),
        };
        let base: u32 = base
            .parse()
            .map_err(|_| format!("bad partition part `{item}`"))?;
        let mult: u32 = mult
            .parse()
            .map_err(|_| format!("bad multiplicity in `{item}`"))?;
        if base == 0 || mult == 0 {
            return Err(format!("partition parts must be positive, got `{item}`"));
        }
        parts.extend(std::iter::repeat_n(base, mult as usize));
    }
    Ok(parts)
}

/// Writes a nonincreasing partition the way tables label it, e.g. `3^2,2^2`.
pub fn format_partition(parts: &[u32]) -> String {
    let mut out = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        if j == 1 {
            out.push(parts[i].to_string());
        } else {
            out.push(format!("{}^{}", parts[i], j));
        }
        i += j;
    }
    out.join(",")
}
