//! Finitely generated abelian groups in invariant-factor form.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with `d₁ | d₂ | … | d_k` and every `dᵢ ≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    #[serde(default)]
    pub free_rank: usize,
    #[serde(default)]
    pub invariant_factors: Vec<u64>,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Self {
        Self::finite(&[n])
    }

    /// Elementary abelian group `(Z/p)^rank`.
    pub fn elementary(p: u64, rank: usize) -> Self {
        Self::finite(&vec![p; rank])
    }

    /// Normalizes an arbitrary list of cyclic orders (in any order, any
    /// divisibility pattern) to invariant-factor form. Orders `0` and `1` are
    /// ignored; use [`AbelianGroup::with_free_rank`] for free summands.
    pub fn finite(orders: &[u64]) -> Self {
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &d in orders {
            if d < 2 {
                continue;
            }
            for (p, e) in factorize(d) {
                primary.entry(p).or_default().push(e);
            }
        }
        let len = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (p, mut exps) in primary {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            // largest exponents go to the last (largest) factor
            for (slot, e) in exps.into_iter().enumerate() {
                factors[len - 1 - slot] *= p.pow(e);
            }
        }
        AbelianGroup {
            free_rank: 0,
            invariant_factors: factors.into_iter().filter(|&d| d > 1).collect(),
        }
    }

    pub fn with_free_rank(mut self, rank: usize) -> Self {
        self.free_rank = rank;
        self
    }

    /// Checks the invariant-factor normal form.
    pub fn is_normalized(&self) -> bool {
        self.invariant_factors.iter().all(|&d| d >= 2)
            && self.invariant_factors.windows(2).all(|w| w[1] % w[0] == 0)
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Order of the group, `None` when a free summand is present.
    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }

    /// Number of cyclic generators (free first, then torsion).
    pub fn rank(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    /// Direct sum.
    pub fn sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = self.invariant_factors.clone();
        orders.extend_from_slice(&other.invariant_factors);
        AbelianGroup::finite(&orders).with_free_rank(self.free_rank + other.free_rank)
    }

    /// All elements of a finite group as residue vectors, in mixed-radix order
    /// with the first coordinate varying slowest.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        assert!(self.is_finite(), "cannot enumerate an infinite group");
        let mut out = vec![Vec::new()];
        for &d in &self.invariant_factors {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for prefix in &out {
                for r in 0..d {
                    let mut v = prefix.clone();
                    v.push(r);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    /// Number of homomorphisms to `Z/n`.
    pub fn hom_count_to_cyclic(&self, n: u64) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        Some(
            self.invariant_factors
                .iter()
                .map(|&d| num_integer::gcd(d, n))
                .product(),
        )
    }

    /// Parses `"2,2"`, `"Z/2 x Z/4"`-style lists, powers such as `"(Z/2)^3"`,
    /// `"0"`, `"1"`, `"trivial"` or the empty string. Accepts everything
    /// `Display` prints for finite groups.
    pub fn parse(text: &str) -> Result<AbelianGroup, String> {
        let t = text.trim();
        if t.is_empty() || t == "0" || t == "1" || t.eq_ignore_ascii_case("trivial") {
            return Ok(AbelianGroup::trivial());
        }
        let mut orders = Vec::new();
        for part in t.split([',', 'x', '+']) {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let bad = || format!("cannot read `{part}` as a cyclic group");
            // "(Z/n)^k" or "Z/n"
            let (base, power) = match part.split_once('^') {
                Some((b, k)) => (b.trim(), k.trim().parse::<usize>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let base = base.trim_start_matches('(').trim_end_matches(')').trim();
            let d: u64 = base.trim_start_matches("Z/").parse().map_err(|_| bad())?;
            if d == 0 {
                return Err("free summands are not accepted here".into());
            }
            orders.extend(std::iter::repeat(d).take(power));
        }
        Ok(AbelianGroup::finite(&orders))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        let fs = &self.invariant_factors;
        while i < fs.len() {
            let mut j = i;
            while j < fs.len() && fs[j] == fs[i] {
                j += 1;
            }
            let run = j - i;
            if run == 1 {
                parts.push(format!("Z/{}", fs[i]));
            } else {
                parts.push(format!("(Z/{})^{}", fs[i], run));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_to_divisibility_chain() {
        assert_eq!(AbelianGroup::finite(&[2, 3]).invariant_factors, vec![6]);
        assert_eq!(AbelianGroup::finite(&[4, 2]).invariant_factors, vec![2, 4]);
        assert_eq!(AbelianGroup::finite(&[6, 4]).invariant_factors, vec![2, 12]);
        assert_eq!(AbelianGroup::finite(&[1, 1]).invariant_factors, Vec::<u64>::new());
        assert!(AbelianGroup::finite(&[12, 18, 5]).is_normalized());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(AbelianGroup::elementary(2, 3).to_string(), "(Z/2)^3");
        assert_eq!(AbelianGroup::finite(&[2, 4]).to_string(), "Z/2 x Z/4");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::trivial().with_free_rank(1).to_string(), "Z");
        assert_eq!(AbelianGroup::parse("2,2").unwrap(), AbelianGroup::elementary(2, 2));
        assert_eq!(AbelianGroup::parse("Z/2 x Z/2").unwrap(), AbelianGroup::elementary(2, 2));
        assert_eq!(AbelianGroup::parse("trivial").unwrap(), AbelianGroup::trivial());
        assert!(AbelianGroup::parse("two").is_err());
        let g = AbelianGroup::parse("(Z/2)^3 x Z/4").unwrap();
        assert_eq!(AbelianGroup::parse(&g.to_string()).unwrap(), g);
        assert_eq!(g.order(), Some(32));
    }

    #[test]
    fn element_enumeration() {
        let g = AbelianGroup::finite(&[2, 4]);
        let els = g.elements();
        assert_eq!(els.len(), 8);
        assert_eq!(els[1], vec![0, 1]);
        assert_eq!(AbelianGroup::trivial().elements(), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn hom_counts() {
        assert_eq!(AbelianGroup::elementary(2, 2).hom_count_to_cyclic(2), Some(4));
        assert_eq!(AbelianGroup::cyclic(3).hom_count_to_cyclic(2), Some(1));
    }
}
