//! Subgroups of an enumerated group, stored as sorted element indices
//! together with a generating set that certifies them.

use std::fmt;

use crate::element::Element;
use crate::error::{GroupError, Result};
use crate::group::Group;

#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    members: Vec<u32>,
    generators: Vec<u32>,
}

impl Subgroup {
    pub fn trivial(parent: &Group) -> Result<Self> {
        parent.enumeration()?;
        Ok(Subgroup {
            parent: parent.clone(),
            members: vec![0],
            generators: Vec::new(),
        })
    }

    pub fn whole(parent: &Group) -> Result<Self> {
        let n = parent.order()? as u32;
        Ok(Subgroup {
            parent: parent.clone(),
            members: (0..n).collect(),
            generators: parent.generator_indices(),
        })
    }

    /// Closure of the given element indices.
    pub fn generated(parent: &Group, gens: &[u32]) -> Result<Self> {
        Subgroup::trivial(parent)?.extend(gens)
    }

    /// `⟨self, extra⟩`, growing the closure from the existing members.
    pub fn extend(&self, extra: &[u32]) -> Result<Self> {
        let g = &self.parent;
        let n = g.len();
        let mut mark = vec![false; n];
        for &m in &self.members {
            mark[m as usize] = true;
        }
        let mut fresh: Vec<u32> = extra.iter().copied().filter(|&x| !mark[x as usize]).collect();
        fresh.sort_unstable();
        fresh.dedup();
        if fresh.is_empty() {
            return Ok(self.clone());
        }
        let mut gens = self.generators.clone();
        gens.extend(&fresh);
        let mut members = self.members.clone();
        // old members only need the new generators; new members need all
        let mut queue: Vec<u32> = Vec::new();
        for &x in &self.members {
            for &t in &fresh {
                let y = g.mul_idx(x, t);
                if !mark[y as usize] {
                    mark[y as usize] = true;
                    members.push(y);
                    queue.push(y);
                }
            }
        }
        while let Some(x) = queue.pop() {
            for &s in &gens {
                let y = g.mul_idx(x, s);
                if !mark[y as usize] {
                    mark[y as usize] = true;
                    members.push(y);
                    queue.push(y);
                }
            }
        }
        members.sort_unstable();
        Ok(Subgroup {
            parent: g.clone(),
            members,
            generators: gens,
        })
    }

    /// Builds a subgroup from a member list, deriving a generating set
    /// greedily and verifying the list is closed.
    pub fn from_members(parent: &Group, members: &[u32]) -> Result<Self> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut sub = Subgroup::trivial(parent)?;
        for &m in &sorted {
            if !sub.contains(m) {
                sub = sub.extend(&[m])?;
                if sub.order() > sorted.len() {
                    break;
                }
            }
        }
        if sub.members != sorted {
            return Err(GroupError::InvalidParameters(
                "element set is not closed under multiplication".into(),
            ));
        }
        Ok(sub)
    }

    pub fn from_elements(parent: &Group, gens: &[Element]) -> Result<Self> {
        parent.enumeration()?;
        let idx = gens
            .iter()
            .map(|e| parent.member_index(e))
            .collect::<Result<Vec<_>>>()?;
        Subgroup::generated(parent, &idx)
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains(&self, i: u32) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn contains_element(&self, e: &Element) -> bool {
        self.parent.index_of(e).is_some_and(|i| self.contains(i))
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent.len()];
        for &i in &self.members {
            m[i as usize] = true;
        }
        m
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.len()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Every conjugate `g n g^-1` with `g` a parent generator and `n ∈ N`
    /// stays in `N`.
    pub fn is_normal(&self) -> bool {
        let mask = self.mask();
        self.parent
            .conj_tables()
            .iter()
            .all(|t| self.members.iter().all(|&n| mask[t[n as usize] as usize]))
    }

    pub fn generator_elements(&self) -> Vec<Element> {
        self.generators
            .iter()
            .map(|&i| self.parent.element(i).clone())
            .collect()
    }

    /// The subgroup as a group in its own right (same law and budget).
    pub fn to_group(&self, label: impl Into<String>) -> Result<Group> {
        let g = Group::new(self.parent.law().clone(), self.generator_elements(), label)?;
        Ok(g.with_budget(self.parent.budget()))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        let common: Vec<u32> = self.members.iter().copied().filter(|&m| other.contains(m)).collect();
        Subgroup::from_members(&self.parent, &common)
    }

    /// `g H g^-1` for a parent element index `g`.
    pub fn conjugate_by(&self, g: u32) -> Result<Subgroup> {
        let p = &self.parent;
        let gens: Vec<u32> = self.generators.iter().map(|&h| p.conj_idx(g, h)).collect();
        let mut members: Vec<u32> = self.members.iter().map(|&h| p.conj_idx(g, h)).collect();
        members.sort_unstable();
        Ok(Subgroup {
            parent: p.clone(),
            members,
            generators: gens,
        })
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_group(&other.parent) && self.members == other.members
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent.label())
            .field("order", &self.members.len())
            .field("generators", &self.generators.len())
            .finish()
    }
}

/// `⟨S⟩` for elements of `G`.
pub fn generated_subgroup(g: &Group, s: &[Element]) -> Result<Subgroup> {
    Subgroup::from_elements(g, s)
}
