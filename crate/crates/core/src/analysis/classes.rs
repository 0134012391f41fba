//! Conjugacy classes as orbits of the generator conjugation tables.
//!
//! Classes are discovered in enumeration order, so each representative is
//! the least element index of its class and class ids ascend with their
//! representatives. Every non-representative records the generator that
//! conjugated its BFS parent onto it, which is enough to rebuild a
//! conjugator from the representative to any class member.

use std::sync::Arc;

use crate::error::Result;
use crate::group::Group;

pub struct ConjClasses {
    class_of: Vec<u32>,
    reps: Vec<u32>,
    /// Members grouped by class; class `c` is `members[offsets[c]..offsets[c+1]]`.
    members: Vec<u32>,
    offsets: Vec<u32>,
    /// `e_i = gen[via[i]] e_parent[i] gen[via[i]]^-1` for non-representatives.
    parent: Vec<u32>,
    via: Vec<u16>,
}

impl ConjClasses {
    fn compute(g: &Group) -> ConjClasses {
        let n = g.len();
        let conj = g.conj_tables();
        let mut class_of = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![0u16; n];
        let mut reps = Vec::new();
        let mut members = Vec::with_capacity(n);
        let mut offsets = vec![0u32];
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(start as u32);
            class_of[start] = c;
            parent[start] = start as u32;
            let begin = members.len();
            members.push(start as u32);
            let mut head = begin;
            while head < members.len() {
                let x = members[head] as usize;
                for (s, table) in conj.iter().enumerate() {
                    let y = table[x] as usize;
                    if class_of[y] == u32::MAX {
                        class_of[y] = c;
                        parent[y] = x as u32;
                        via[y] = s as u16;
                        members.push(y as u32);
                    }
                }
                head += 1;
            }
            offsets.push(members.len() as u32);
        }
        ConjClasses {
            class_of,
            reps,
            members,
            offsets,
            parent,
            via,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[u32] {
        &self.reps
    }

    pub fn class_of(&self, x: u32) -> usize {
        self.class_of[x as usize] as usize
    }

    pub fn members(&self, c: usize) -> &[u32] {
        &self.members[self.offsets[c] as usize..self.offsets[c + 1] as usize]
    }

    pub fn size(&self, c: usize) -> usize {
        (self.offsets[c + 1] - self.offsets[c]) as usize
    }

    pub fn sizes(&self) -> Vec<usize> {
        (0..self.len()).map(|c| self.size(c)).collect()
    }

    pub fn same_class(&self, x: u32, y: u32) -> bool {
        self.class_of[x as usize] == self.class_of[y as usize]
    }

    /// Index of some `g` with `g r g^-1 = x`, where `r` is the
    /// representative of `x`'s class.
    pub fn conjugator(&self, g: &Group, x: u32) -> u32 {
        let gens = g.generator_indices();
        let mut acc = 0u32;
        let mut cur = x as usize;
        while self.parent[cur] as usize != cur {
            acc = g.mul_idx(acc, gens[self.via[cur] as usize]);
            cur = self.parent[cur] as usize;
        }
        acc
    }
}

/// Conjugacy classes of `g`, computed once and cached on the group.
pub fn conjugacy_classes(g: &Group) -> Result<Arc<ConjClasses>> {
    g.enumeration()?;
    Ok(g.classes_cell()
        .get_or_init(|| Arc::new(ConjClasses::compute(g)))
        .clone())
}

/// Whether `x^-1` is conjugate to `x`.
pub fn is_real(g: &Group, x: u32) -> Result<bool> {
    let cl = conjugacy_classes(g)?;
    Ok(cl.same_class(x, g.inv_idx(x)))
}
