//! JSON descriptions of groups.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::constructions::{cyclic_with_cap, direct_product_with_cap, gn_with_cap, named};
use crate::error::{Error, Result};
use crate::group::{Group, Permutation};

/// A group description, tagged by `"type"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Gn {
        p: u32,
        n: usize,
    },
    /// Generators as lists of disjoint cycles on the points `1..=points`.
    Perm {
        points: usize,
        generators: Vec<Vec<Vec<u32>>>,
    },
    Cyclic {
        n: u32,
    },
    Product {
        factors: Vec<GroupSpec>,
    },
    Named {
        name: String,
    },
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid group spec: {e}")))
    }

    /// Compact JSON with keys sorted at every level.
    pub fn canonical(&self) -> String {
        // serde_json's default map type is ordered by key
        let value = serde_json::to_value(self).expect("group specs serialize");
        serde_json::to_string(&value).expect("values serialize")
    }

    pub fn build(&self, cap: usize) -> Result<Arc<Group>> {
        match self {
            GroupSpec::Gn { p, n } => gn_with_cap(*p, *n, cap),
            GroupSpec::Perm { points, generators } => {
                let perms = generators
                    .iter()
                    .map(|cycles| Permutation::from_cycles(*points, cycles))
                    .collect::<Result<Vec<_>>>()?;
                Group::from_permutations(format!("perm{points}"), *points, &perms, cap)
            }
            GroupSpec::Cyclic { n } => cyclic_with_cap(*n, cap),
            GroupSpec::Product { factors } => {
                let (first, rest) =
                    factors.split_first().ok_or_else(|| Error::Input("product needs at least one factor".into()))?;
                let mut acc = first.build(cap)?;
                for f in rest {
                    acc = direct_product_with_cap(&acc, &f.build(cap)?, cap)?;
                }
                Ok(acc)
            }
            GroupSpec::Named { name } => {
                let g = named(name)?;
                if g.order() > cap {
                    return Err(Error::Resource(format!("{name} has order {} above the cap of {cap}", g.order())));
                }
                Ok(g)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_sorts_keys() {
        let s = GroupSpec::parse(r#"{ "n": 2, "p": 3, "type": "gn" }"#).unwrap();
        assert_eq!(s.canonical(), r#"{"n":2,"p":3,"type":"gn"}"#);
        let again = GroupSpec::parse(&s.canonical()).unwrap();
        assert_eq!(again.canonical(), s.canonical());
    }

    #[test]
    fn builds_each_kind() {
        let cap = 1_000_000;
        let perm = GroupSpec::parse(r#"{"type":"perm","points":3,"generators":[[[1,2,3]],[[1,2]]]}"#).unwrap();
        assert_eq!(perm.build(cap).unwrap().order(), 6);
        let prod = GroupSpec::parse(
            r#"{"type":"product","factors":[{"type":"named","name":"heis3"},{"type":"cyclic","n":3}]}"#,
        )
        .unwrap();
        assert_eq!(prod.build(cap).unwrap().order(), 81);
        assert_eq!(GroupSpec::parse(r#"{"type":"cyclic","n":1}"#).unwrap().build(cap).unwrap().order(), 1);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(GroupSpec::parse(r#"{"type":"gn","p":3}"#), Err(Error::Input(_))));
        assert!(matches!(GroupSpec::parse(r#"{"type":"cyclic","n":3,"extra":1}"#), Err(Error::Input(_))));
        assert!(matches!(GroupSpec::parse("not json"), Err(Error::Input(_))));
        let big = GroupSpec::parse(r#"{"type":"gn","p":5,"n":2}"#).unwrap();
        assert!(matches!(big.build(1000), Err(Error::Resource(_))));
        let empty = GroupSpec::parse(r#"{"type":"product","factors":[]}"#).unwrap();
        assert!(matches!(empty.build(1000), Err(Error::Input(_))));
        let unknown = GroupSpec::parse(r#"{"type":"named","name":"a5"}"#).unwrap();
        assert!(matches!(unknown.build(1000), Err(Error::Input(_))));
    }
}
