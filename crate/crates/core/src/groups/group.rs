//! Exhaustive enumeration of a finite reflection group.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use super::RootSystem;
use crate::arith::linalg::{self, Matrix};
use crate::arith::{Frf, Polynomial, Scalar, VariableLayout};
use crate::error::{show_point, Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 10_000;
const TABLE_LIMIT: usize = 2_048;

#[derive(Clone, Debug)]
pub struct GroupElement {
    pub matrix: Matrix,
    pub inverse: Matrix,
    /// `π` with `g e_i = e_{π(i)}`, when `g` permutes coordinates.
    pub perm: Option<Vec<usize>>,
    /// Lexicographically smallest reduced word, letters index the simple reflections.
    pub word: Vec<usize>,
}

impl GroupElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// A set of group elements closed under multiplication, stored as sorted indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elems: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elems.binary_search(&g).is_ok()
    }
}

pub struct ReflectionGroup {
    rs: RootSystem,
    elems: Vec<GroupElement>,
    index: HashMap<Vec<Scalar>, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    simple: Vec<usize>,
    w0: usize,
}

impl std::fmt::Debug for ReflectionGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ReflectionGroup(order {}, rank {}, {:?})", self.order(), self.rank(), self.layout())
    }
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    m.iter().flatten().cloned().collect()
}

impl ReflectionGroup {
    pub fn generate(rs: RootSystem) -> Result<Arc<Self>> {
        Self::generate_with_cap(rs, DEFAULT_ORDER_CAP)
    }

    /// Breadth-first closure under right multiplication by simple reflections, so elements
    /// come out sorted by `(length, lex word)`.
    pub fn generate_with_cap(rs: RootSystem, cap: usize) -> Result<Arc<Self>> {
        let n = rs.dim();
        let gens: Vec<Matrix> = rs.simple_roots().iter().map(|a| rs.reflection_matrix(a)).collect();
        let id = linalg::identity(n);
        let mut elems = vec![GroupElement { matrix: id.clone(), inverse: id.clone(), perm: linalg::as_permutation(&id), word: vec![] }];
        let mut index = HashMap::from([(flat(&id), 0usize)]);
        let mut i = 0;
        while i < elems.len() {
            for (s, gm) in gens.iter().enumerate() {
                let m = linalg::mat_mul(&elems[i].matrix, gm);
                let key = flat(&m);
                if index.contains_key(&key) {
                    continue;
                }
                if elems.len() >= cap {
                    return Err(Error::OrderCapExceeded(cap));
                }
                let inverse = linalg::mat_mul(gm, &elems[i].inverse);
                let mut word = elems[i].word.clone();
                word.push(s);
                index.insert(key, elems.len());
                elems.push(GroupElement { perm: linalg::as_permutation(&m), matrix: m, inverse, word });
            }
            i += 1;
        }
        let simple = (0..gens.len()).map(|s| index[&flat(&gens[s])]).collect();
        let inverses = elems.iter().map(|e| index[&flat(&e.inverse)]).collect();
        let w0 = elems.len() - 1;
        let mut g = Self { rs, elems, index, table: None, inverses, simple, w0 };
        if g.order() <= TABLE_LIMIT {
            let k = g.order();
            let mut table = vec![0u32; k * k];
            for a in 0..k {
                for b in 0..k {
                    table[a * k + b] = g.mul_slow(a, b) as u32;
                }
            }
            g.table = Some(table);
        }
        if g.elems[w0].length() != g.rs.positive_roots().len() {
            return Err(Error::NotARootSystem("longest element has wrong length".into()));
        }
        Ok(Arc::new(g))
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let (ea, eb) = (&self.elems[a], &self.elems[b]);
        let m = match (&ea.perm, &eb.perm) {
            (Some(pa), Some(pb)) => {
                // (ab) e_i = e_{pa(pb(i))}
                let n = pa.len();
                let mut m = vec![vec![Scalar::zero(); n]; n];
                for i in 0..n {
                    m[pa[pb[i]]][i] = Scalar::from_integer(1.into());
                }
                m
            }
            _ => linalg::mat_mul(&ea.matrix, &eb.matrix),
        };
        self.index[&flat(&m)]
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn layout(&self) -> &VariableLayout {
        self.rs.layout()
    }

    pub fn dim(&self) -> usize {
        self.rs.dim()
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, g: usize) -> &GroupElement {
        &self.elems[g]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elems
    }

    pub fn simple_reflection(&self, s: usize) -> usize {
        self.simple[s]
    }

    pub fn simple_reflections(&self) -> &[usize] {
        &self.simple
    }

    pub fn longest(&self) -> usize {
        self.w0
    }

    pub fn length(&self, g: usize) -> usize {
        self.elems[g].length()
    }

    pub fn word(&self, g: usize) -> &[usize] {
        &self.elems[g].word
    }

    pub fn reduced_word(&self, g: usize) -> Vec<usize> {
        self.elems[g].word.clone()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut g = 0;
        for &s in word {
            if s >= self.rank() {
                return Err(Error::NotInGroup);
            }
            g = self.mul(g, self.simple[s]);
        }
        Ok(g)
    }

    pub fn lookup(&self, m: &Matrix) -> Option<usize> {
        self.index.get(&flat(m)).copied()
    }

    /// `g · x`.
    pub fn act_point(&self, g: usize, x: &[Scalar]) -> Vec<Scalar> {
        let e = &self.elems[g];
        match &e.perm {
            Some(p) => {
                let mut y = vec![Scalar::zero(); x.len()];
                for (i, v) in x.iter().enumerate() {
                    y[p[i]] = v.clone();
                }
                y
            }
            None => linalg::mat_vec(&e.matrix, x),
        }
    }

    /// `(g·f)(x) = f(g⁻¹ x)`.
    pub fn act_poly(&self, g: usize, f: &Polynomial) -> Polynomial {
        let e = &self.elems[g];
        match &e.perm {
            Some(p) => f.permute_vars(p),
            None => f.pull_back(&e.inverse, &vec![Scalar::zero(); self.dim()]).expect("dimensions match"),
        }
    }

    pub fn act_frf(&self, g: usize, f: &Frf) -> Frf {
        if g == 0 {
            return f.clone();
        }
        f.pull_back(&self.elems[g].inverse, &vec![Scalar::zero(); self.dim()]).expect("dimensions match")
    }

    /// `x -> f(g⁻¹(x − ξ))`.
    pub fn transport(&self, g: usize, xi: &[Scalar], f: &Frf) -> Frf {
        let neg: Vec<Scalar> = xi.iter().map(|t| -t).collect();
        self.act_frf(g, f).translate(&neg)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, g: usize) -> usize {
        self.rs
            .positive_roots()
            .iter()
            .filter(|x| !self.rs.is_positive_root(&self.act_point(g, x)))
            .count()
    }

    /// Element index of the reflection in the root `x`.
    pub fn reflection(&self, x: &[Scalar]) -> usize {
        self.lookup(&self.rs.reflection_matrix(x)).expect("reflections lie in the group")
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { elems: (0..self.order()).collect() }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup { elems: vec![0] }
    }

    /// Closure of a generating set.
    pub fn generated_by(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut list = vec![0];
        let mut i = 0;
        while i < list.len() {
            for &s in gens {
                let h = self.mul(list[i], s);
                if !seen[h] {
                    seen[h] = true;
                    list.push(h);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        Subgroup { elems: list }
    }

    /// The parabolic subgroup generated by the simple reflections with indices in `j`.
    pub fn parabolic(&self, j: &[usize]) -> Subgroup {
        let gens: Vec<usize> = j.iter().map(|&s| self.simple[s]).collect();
        self.generated_by(&gens)
    }

    pub fn subgroup_from_elements(&self, mut elems: Vec<usize>) -> Result<Subgroup> {
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(Error::NotInGroup);
        }
        let s = Subgroup { elems };
        for &a in s.elements() {
            for &b in s.elements() {
                if !s.contains(self.mul(a, b)) {
                    return Err(Error::NotInGroup);
                }
            }
        }
        Ok(s)
    }

    /// The simple reflections in `h`, if `h` is generated by them.
    pub fn parabolic_type(&self, h: &Subgroup) -> Option<Vec<usize>> {
        let j: Vec<usize> = (0..self.rank()).filter(|&s| h.contains(self.simple[s])).collect();
        (self.parabolic(&j).order() == h.order()).then_some(j)
    }

    pub fn stabilizer(&self, x: &[Scalar]) -> Subgroup {
        Subgroup { elems: (0..self.order()).filter(|&g| self.act_point(g, x) == x).collect() }
    }

    /// Distinct points of the orbit, each with the first element reaching it.
    pub fn orbit(&self, x: &[Scalar]) -> Vec<(Vec<Scalar>, usize)> {
        let mut seen: HashMap<Vec<Scalar>, usize> = HashMap::new();
        let mut out = Vec::new();
        for g in 0..self.order() {
            let y = self.act_point(g, x);
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), g);
                out.push((y, g));
            }
        }
        out
    }

    /// Antidominant representative `(x', g)` with `g·x = x'`; its stabilizer is parabolic.
    pub fn parabolic_rep(&self, x: &[Scalar]) -> Result<(Vec<Scalar>, usize)> {
        let bound = self.rs.positive_roots().len() + 1;
        let mut p = x.to_vec();
        let mut g = 0;
        for _ in 0..=bound {
            let hit = self.rs.simple_roots().iter().position(|a| self.rs.pairing(a, &p).is_positive());
            match hit {
                None => {
                    if self.parabolic_type(&self.stabilizer(&p)).is_none() {
                        return Err(Error::NoParabolicRepresentative(show_point(x)));
                    }
                    return Ok((p, g));
                }
                Some(s) => {
                    p = self.act_point(self.simple[s], &p);
                    g = self.mul(self.simple[s], g);
                }
            }
        }
        Err(Error::NoParabolicRepresentative(show_point(x)))
    }

    /// One minimal-length representative per left coset `wP`, sorted by `(length, lex word)`.
    pub fn shortest_coset_reps(&self, p: &Subgroup) -> Result<Vec<usize>> {
        if self.parabolic_type(p).is_none() {
            return Err(Error::NotParabolic);
        }
        let mut done = vec![false; self.order()];
        let mut reps = Vec::new();
        for w in 0..self.order() {
            if done[w] {
                continue;
            }
            reps.push(w);
            for &h in p.elements() {
                done[self.mul(w, h)] = true;
            }
        }
        Ok(reps)
    }

    /// Longest element of `(G/P)^short`.
    pub fn longest_short_rep(&self, p: &Subgroup) -> Result<usize> {
        let reps = self.shortest_coset_reps(p)?;
        Ok(*reps.iter().max_by_key(|&&w| self.length(w)).unwrap())
    }

    /// Longest element of a parabolic subgroup.
    pub fn longest_in(&self, p: &Subgroup) -> usize {
        *p.elements().iter().max_by_key(|&&w| self.length(w)).unwrap()
    }

    /// Every reduced word of `g`.
    pub fn all_reduced_words(&self, g: usize) -> Vec<Vec<usize>> {
        if g == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for s in 0..self.rank() {
            let h = self.mul(self.simple[s], g);
            if self.length(h) < self.length(g) {
                for mut w in self.all_reduced_words(h) {
                    w.insert(0, s);
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }

    /// The reflection subgroup generated by the reflections contained in `k`, as a group of
    /// its own; errors if `k` is not generated by reflections.
    pub fn reflection_subgroup(&self, k: &Subgroup) -> Result<Arc<ReflectionGroup>> {
        let roots: Vec<Vec<Scalar>> = self
            .rs
            .positive_roots()
            .iter()
            .filter(|x| k.contains(self.reflection(x)))
            .cloned()
            .collect();
        let simple: Vec<Vec<Scalar>> = roots
            .iter()
            .filter(|b| {
                let r = self.rs.reflection_matrix(b);
                roots.iter().filter(|x| !self.rs.is_positive_root(&linalg::mat_vec(&r, x))).count() == 1
            })
            .cloned()
            .collect();
        let rs = RootSystem::new(self.layout().clone(), simple, Some(self.rs.form().clone()))?;
        let sub = ReflectionGroup::generate(rs)?;
        if sub.order() != k.order() {
            return Err(Error::NotParabolic);
        }
        Ok(sub)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ints, VariableLayout};

    fn s(n: &[usize]) -> Arc<ReflectionGroup> {
        ReflectionGroup::generate(RootSystem::type_a_product(n).unwrap()).unwrap()
    }

    fn b2() -> Arc<ReflectionGroup> {
        let rs = RootSystem::new(VariableLayout::flat(2), vec![ints(&[1, -1]), ints(&[0, 1])], None).unwrap();
        ReflectionGroup::generate(rs).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(s(&[2]).order(), 2);
        assert_eq!(s(&[3]).order(), 6);
        assert_eq!(b2().order(), 8);
        assert_eq!(s(&[2, 2]).order(), 4);
        assert_eq!(s(&[1, 2, 3, 4]).order(), 288);
        for m in [2, 3, 4, 6] {
            assert_eq!(ReflectionGroup::generate(RootSystem::dihedral(m).unwrap()).unwrap().order(), 2 * m as usize);
        }
    }

    #[test]
    fn order_cap() {
        let r = ReflectionGroup::generate_with_cap(RootSystem::type_a_product(&[4]).unwrap(), 10);
        assert!(matches!(r, Err(Error::OrderCapExceeded(10))));
    }

    #[test]
    fn lengths_match_inversions() {
        for g in [s(&[2]), s(&[3]), s(&[2, 2]), b2()] {
            for w in 0..g.order() {
                assert_eq!(g.length(w), g.inversions(w));
                assert_eq!(g.from_word(g.word(w)).unwrap(), w);
            }
            let w0 = g.longest();
            assert_eq!(g.mul(w0, w0), 0);
            assert_eq!(g.length(w0), g.root_system().positive_roots().len());
        }
    }

    #[test]
    fn reduced_words() {
        let g = s(&[3]);
        assert!(g.reduced_word(0).is_empty());
        assert_eq!(g.reduced_word(g.simple_reflection(0)), vec![0]);
        assert_eq!(g.reduced_word(g.longest()), vec![0, 1, 0]);
        let all = g.all_reduced_words(g.longest());
        assert_eq!(all, vec![vec![0, 1, 0], vec![1, 0, 1]]);
        for w in all {
            assert_eq!(g.from_word(&w).unwrap(), g.longest());
        }
    }

    #[test]
    fn coset_reps() {
        let g = s(&[3]);
        assert_eq!(g.shortest_coset_reps(&g.whole()).unwrap(), vec![0]);
        assert_eq!(g.shortest_coset_reps(&g.trivial()).unwrap().len(), 6);
        let p = g.parabolic(&[0]);
        let reps = g.shortest_coset_reps(&p).unwrap();
        let lens: Vec<usize> = reps.iter().map(|&w| g.length(w)).collect();
        assert_eq!(lens, vec![0, 1, 2]);
        let bad = g.subgroup_from_elements(vec![0, g.reflection(&ints(&[1, 0, -1]))]).unwrap();
        assert!(matches!(g.shortest_coset_reps(&bad), Err(Error::NotParabolic)));
        for j in [vec![], vec![0], vec![1], vec![0, 1]] {
            let p = g.parabolic(&j);
            assert_eq!(g.shortest_coset_reps(&p).unwrap().len() * p.order(), g.order());
        }
    }

    #[test]
    fn stabilizers_and_reps() {
        let g = s(&[3]);
        assert_eq!(g.stabilizer(&ints(&[1, 2, 3])).order(), 1);
        assert_eq!(g.stabilizer(&ints(&[0, 0, 0])).order(), 6);
        let st = g.stabilizer(&ints(&[5, 5, 7]));
        assert_eq!(st.elements(), &[0, g.simple_reflection(0)]);
        let (p, h) = g.parabolic_rep(&ints(&[7, 5, 5])).unwrap();
        assert_eq!(p, ints(&[5, 5, 7]));
        assert_eq!(g.act_point(h, &ints(&[7, 5, 5])), p);
        assert_eq!(g.parabolic_type(&g.stabilizer(&p)), Some(vec![0]));
        assert_eq!(g.parabolic_rep(&ints(&[1, 2, 3])).unwrap(), (ints(&[1, 2, 3]), 0));
        let gb = b2();
        let (p, h) = gb.parabolic_rep(&ints(&[3, -1])).unwrap();
        assert_eq!(gb.act_point(h, &ints(&[3, -1])), p);
        assert!(gb.parabolic_type(&gb.stabilizer(&p)).is_some());
    }

    #[test]
    fn reflection_subgroups() {
        let g = s(&[3]);
        let k = g.stabilizer(&ints(&[0, 1, 0]));
        let sub = g.reflection_subgroup(&k).unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(sub.root_system().simple_roots(), &[ints(&[1, 0, -1])]);
    }
}
