use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::perm::Perm;
use super::table::{self, TableData};
use crate::{Error, Result};

/// Largest group order enumerated unless a different cap is requested.
pub const DEFAULT_GROUP_CAP: usize = 20_000;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Element index of the representative, the lexicographically least member.
    pub rep: usize,
    pub members: Vec<usize>,
    pub element_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

struct Classes {
    list: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

struct Inner {
    degree: usize,
    generators: Vec<Perm>,
    name: Option<String>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    classes: OnceLock<Classes>,
    table: OnceLock<std::result::Result<Arc<TableData>, String>>,
}

/// A finite permutation group with its full element list.
///
/// Cloning is cheap; conjugacy classes and the character table are computed
/// once and shared between clones.
#[derive(Clone)]
pub struct PermGroup(Arc<Inner>);

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        Self::with_cap(degree, generators, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::Dimension(format!("generator {g} has degree {}, expected {degree}", g.degree())));
        }
        let generators: Vec<Perm> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let h = &elements[i] * g;
                if !index.contains_key(&h) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { what: "group order".into(), cap });
                    }
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        Ok(PermGroup(Arc::new(Inner {
            degree,
            generators,
            name: None,
            elements,
            index,
            classes: OnceLock::new(),
            table: OnceLock::new(),
        })))
    }

    /// From 1-based image lists.
    pub fn from_one_based(degree: usize, generators: &[Vec<u32>]) -> Result<Self> {
        let gens = generators.iter().map(|g| Perm::from_one_based(g)).collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn named(self, name: impl Into<String>) -> Self {
        let inner = Arc::try_unwrap(self.0).unwrap_or_else(|arc| Inner {
            degree: arc.degree,
            generators: arc.generators.clone(),
            name: None,
            elements: arc.elements.clone(),
            index: arc.index.clone(),
            classes: OnceLock::new(),
            table: OnceLock::new(),
        });
        PermGroup(Arc::new(Inner { name: Some(name.into()), ..inner }))
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.generators
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    /// All elements; index 0 is the identity.
    pub fn elements(&self) -> &[Perm] {
        &self.0.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.0.elements[i]
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.0.index.get(g).copied()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.0.index.contains_key(g)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.index[&(&self.0.elements[a] * &self.0.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.0.index[&self.0.elements[a].inverse()]
    }

    /// True when both handles describe the same set of permutations.
    pub fn same_as(&self, other: &PermGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.degree() == other.degree()
                && self.order() == other.order()
                && other.generators().iter().all(|g| self.contains(g)))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.generators().iter().all(|x| self.generators().iter().all(|h| self.contains(&h.conjugate(x))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter().all(|a| g.iter().all(|b| &(a * b) == &(b * a)))
    }

    pub fn exponent(&self) -> usize {
        self.classes().iter().fold(1, |e, c| num_integer::lcm(e, c.element_order))
    }

    /// The subgroup generated by `gens`, which must lie in this group.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        if let Some(g) = gens.iter().find(|g| !self.contains(g)) {
            return Err(Error::Invalid(format!("{g} is not an element of the group")));
        }
        PermGroup::new(self.degree(), gens)
    }

    /// The subgroup formed by a set of elements closed under products.
    /// Generators are chosen greedily.
    pub fn subgroup_from_elements(&self, members: &[usize]) -> Result<PermGroup> {
        let mut gens: Vec<Perm> = Vec::new();
        let mut current = PermGroup::new(self.degree(), Vec::new())?;
        for &m in members {
            let g = self.element(m);
            if !current.contains(g) {
                gens.push(g.clone());
                current = PermGroup::new(self.degree(), gens.clone())?;
            }
        }
        if current.order() != members.len() {
            return Err(Error::Invalid("element set is not a subgroup".into()));
        }
        Ok(current)
    }

    fn class_data(&self) -> &Classes {
        self.0.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut raw: Vec<Vec<usize>> = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let id = raw.len();
                let mut members = vec![start];
                class_of[start] = id;
                let mut k = 0;
                while k < members.len() {
                    let x = &self.0.elements[members[k]];
                    for g in &self.0.generators {
                        let y = self.0.index[&x.conjugate(g)];
                        if class_of[y] == usize::MAX {
                            class_of[y] = id;
                            members.push(y);
                        }
                    }
                    k += 1;
                }
                raw.push(members);
            }
            let mut list: Vec<ConjugacyClass> = raw
                .into_iter()
                .map(|mut members| {
                    members.sort_by(|&a, &b| self.0.elements[a].cmp(&self.0.elements[b]));
                    ConjugacyClass { rep: members[0], element_order: self.0.elements[members[0]].order(), members }
                })
                .collect();
            list.sort_by(|a, b| {
                (a.element_order, a.size())
                    .cmp(&(b.element_order, b.size()))
                    .then_with(|| self.0.elements[a.rep].cmp(&self.0.elements[b.rep]))
            });
            for (c, cl) in list.iter().enumerate() {
                for &m in &cl.members {
                    class_of[m] = c;
                }
            }
            Classes { list, class_of }
        })
    }

    /// Conjugacy classes; class 0 is the identity.
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.class_data().list
    }

    pub fn class_count(&self) -> usize {
        self.classes().len()
    }

    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_data().class_of[i]
    }

    pub fn class_of(&self, g: &Perm) -> Option<usize> {
        self.index_of(g).map(|i| self.class_of_index(i))
    }

    pub fn class_rep(&self, c: usize) -> &Perm {
        self.element(self.classes()[c].rep)
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.order() / self.classes()[c].size()
    }

    /// Class containing `g^k` for `g` in class `c`.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        self.class_of(&self.class_rep(c).pow(k)).expect("group is closed")
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_class(c, -1)
    }

    /// The prime used for the modular stage of the character table computation.
    pub fn table_prime(&self) -> Result<u64> {
        Ok(self.table_data()?.prime)
    }

    pub(crate) fn table_data(&self) -> Result<Arc<TableData>> {
        self.0
            .table
            .get_or_init(|| table::dixon(self).map(Arc::new).map_err(|e| e.to_string()))
            .clone()
            .map_err(Error::Falsified)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "PermGroup({}, order {}, <{}>)", self.name().unwrap_or("G"), self.order(), gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        PermGroup::new(
            4,
            vec![Perm::from_cycles(4, &[&[0, 1]]).unwrap(), Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn s4_classes() {
        let g = s4();
        assert_eq!(g.order(), 24);
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 3, 6, 8, 6]);
        assert!(g.element(0).is_identity());
        assert_eq!(g.exponent(), 12);
        assert_eq!(g.power_class(4, 2), 1);
        assert!(!g.is_abelian());
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![Perm::from_cycles(5, &[&[0, 1]]).unwrap(), Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()];
        let err = PermGroup::with_cap(5, gens, 100).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 100, .. }));
    }

    #[test]
    fn normality() {
        let g = s4();
        let v4 = g
            .subgroup(vec![Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(), Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap()])
            .unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_normal_in(&g));
        let c2 = g.subgroup(vec![Perm::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        assert!(!c2.is_normal_in(&g));
        let members: Vec<usize> = v4.elements().iter().map(|p| g.index_of(p).unwrap()).collect();
        assert!(g.subgroup_from_elements(&members).unwrap().same_as(&v4));
    }
}
