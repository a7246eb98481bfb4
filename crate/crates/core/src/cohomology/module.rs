use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::CohomologyError;
use crate::groups::FiniteGroup;

/// A finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/dᵢ` with a group
/// action. `action[g]` is an integer matrix whose column `j` is the image of
/// generator `j` (free generators first, then torsion generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    free_rank: usize,
    torsion: Vec<u64>,
    action: Vec<Vec<Vec<i64>>>,
}

impl GModule {
    /// Validates the action against `group`.
    pub fn new(
        group: &FiniteGroup,
        free_rank: usize,
        torsion: Vec<u64>,
        action: Vec<Vec<Vec<i64>>>,
    ) -> Result<Self, CohomologyError> {
        let module = GModule { free_rank, torsion, action };
        module.validate(group)?;
        Ok(module)
    }

    /// Trivial action on `Z^free_rank ⊕ ⊕ Z/dᵢ`.
    pub fn trivial(group: &FiniteGroup, free_rank: usize, torsion: Vec<u64>) -> Self {
        let r = free_rank + torsion.len();
        let id = identity(r);
        GModule { free_rank, torsion, action: vec![id; group.order()] }
    }

    pub fn integers(group: &FiniteGroup) -> Self {
        Self::trivial(group, 1, vec![])
    }

    /// `Z/n` with trivial action; `n = 1` gives the zero module.
    pub fn cyclic(group: &FiniteGroup, n: u64) -> Self {
        Self::trivial(group, 0, if n >= 2 { vec![n] } else { vec![] })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn action(&self, g: usize) -> &[Vec<i64>] {
        &self.action[g]
    }

    pub fn is_trivial_action(&self) -> bool {
        let id = identity(self.rank());
        self.action.iter().all(|a| self.reduce_matrix(a) == id)
    }

    /// Order of generator `k`, `0` for free generators.
    pub fn generator_order(&self, k: usize) -> u64 {
        if k < self.free_rank {
            0
        } else {
            self.torsion[k - self.free_rank]
        }
    }

    /// Reduces coordinate `k` of a module element to its canonical residue.
    pub fn reduce_coord(&self, k: usize, x: i64) -> i64 {
        match self.generator_order(k) {
            0 => x,
            d => x.rem_euclid(d as i64),
        }
    }

    pub fn reduce(&self, v: &mut [i64]) {
        for (k, x) in v.iter_mut().enumerate() {
            *x = self.reduce_coord(k, *x);
        }
    }

    fn reduce_matrix(&self, a: &[Vec<i64>]) -> Vec<Vec<i64>> {
        a.iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|&x| self.reduce_coord(i, x)).collect())
            .collect()
    }

    /// `g · m`, reduced.
    pub fn act(&self, g: usize, m: &[i64]) -> Vec<i64> {
        let a = &self.action[g];
        let mut out: Vec<i64> = a
            .iter()
            .map(|row| row.iter().zip(m).map(|(x, y)| x * y).sum())
            .collect();
        self.reduce(&mut out);
        out
    }

    pub fn validate(&self, group: &FiniteGroup) -> Result<(), CohomologyError> {
        let r = self.rank();
        let bad = |msg: String| Err(CohomologyError::InvalidModule(msg));
        if let Some(d) = self.torsion.iter().find(|&&d| d < 2) {
            return bad(format!("torsion order {d} must be at least 2"));
        }
        if self.action.len() != group.order() {
            return bad(format!(
                "{} action matrices for a group of order {}",
                self.action.len(),
                group.order()
            ));
        }
        for (g, a) in self.action.iter().enumerate() {
            if a.len() != r || a.iter().any(|row| row.len() != r) {
                return bad(format!("action of {g} is not {r}x{r}"));
            }
            // column j must be killed by the order of generator j
            for j in 0..r {
                let dj = self.generator_order(j) as i64;
                for i in 0..r {
                    let entry = a[i][j];
                    let ok = match (self.generator_order(i), dj) {
                        (_, 0) => true,
                        (0, _) => entry == 0,
                        (di, _) => (dj * entry).rem_euclid(di as i64) == 0,
                    };
                    if !ok {
                        return bad(format!(
                            "action of {g} does not respect the order of generator {j}"
                        ));
                    }
                }
            }
        }
        if self.reduce_matrix(&self.action[0]) != identity(r) {
            return bad("identity does not act trivially".into());
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let prod = matmul(&self.action[g], &self.action[h]);
                if self.reduce_matrix(&prod) != self.reduce_matrix(&self.action[group.mul(g, h)]) {
                    return bad(format!("action of {g}*{h} is not the composite"));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(group: &FiniteGroup, text: &str) -> Result<Self, CohomologyError> {
        let input: ModuleInput = serde_json::from_str(text)
            .map_err(|e| CohomologyError::InvalidModule(e.to_string()))?;
        input.build(group)
    }

    pub fn to_input(&self) -> ModuleInput {
        let id = identity(self.rank());
        let action = self
            .action
            .iter()
            .enumerate()
            .filter(|(_, a)| **a != id)
            .map(|(g, a)| (g.to_string(), a.clone()))
            .collect();
        ModuleInput { free_rank: self.free_rank, torsion: self.torsion.clone(), action }
    }
}

/// JSON module format; elements missing from `action` act as the identity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleInput {
    #[serde(default)]
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<u64>,
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<i64>>>,
}

impl ModuleInput {
    pub fn build(&self, group: &FiniteGroup) -> Result<GModule, CohomologyError> {
        let r = self.free_rank + self.torsion.len();
        let mut action = vec![identity(r); group.order()];
        for (key, m) in &self.action {
            let g: usize = key
                .parse()
                .map_err(|_| CohomologyError::InvalidModule(format!("bad element key `{key}`")))?;
            if g >= group.order() {
                return Err(CohomologyError::InvalidModule(format!(
                    "element {g} out of range"
                )));
            }
            action[g] = m.clone();
        }
        GModule::new(group, self.free_rank, self.torsion.clone(), action)
    }
}

fn identity(r: usize) -> Vec<Vec<i64>> {
    (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_module_of_z2() {
        let g = FiniteGroup::cyclic(2);
        let m = GModule::new(&g, 1, vec![], vec![vec![vec![1]], vec![vec![-1]]]).unwrap();
        assert!(!m.is_trivial_action());
        assert_eq!(m.act(1, &[3]), vec![-3]);
    }

    #[test]
    fn rejects_bad_actions() {
        let g = FiniteGroup::cyclic(2);
        // not a homomorphism: 1*1 = 0 but 2*2 = 4 != 1
        assert!(GModule::new(&g, 1, vec![], vec![vec![vec![1]], vec![vec![2]]]).is_err());
        // negation on Z/3: 2*2 = 4 = 1 mod 3
        assert!(GModule::new(&g, 0, vec![3], vec![vec![vec![1]], vec![vec![2]]]).is_ok());
        // a torsion generator of order 2 cannot map onto a free generator
        let mixed = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1], vec![0, 1]]];
        assert!(GModule::new(&g, 1, vec![2], mixed).is_err());
        let z3 = FiniteGroup::cyclic(3);
        assert!(GModule::new(&z3, 0, vec![2], vec![vec![vec![1]]; 3]).is_ok());
        assert!(GModule::new(&g, 0, vec![1], vec![vec![vec![1]]; 2]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = FiniteGroup::cyclic(2);
        let m = GModule::from_json(&g, r#"{"free_rank": 1, "action": {"1": [[-1]]}}"#).unwrap();
        assert_eq!(m.action(1), &[vec![-1]]);
        let text = serde_json::to_string(&m.to_input()).unwrap();
        assert_eq!(GModule::from_json(&g, &text).unwrap(), m);
        assert!(GModule::from_json(&g, r#"{"torsion": [2], "action": {"5": [[1]]}}"#).is_err());
    }
}
