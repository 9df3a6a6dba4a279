use std::collections::BTreeMap;

use crate::algebra::{Elem, FiniteAlgebra, FiniteBoundedLattice, FiniteResiduatedLattice, Structure, Table};
use crate::error::{Error, Result};
use crate::filters::{all_filters, quotient};
use crate::morphism::{check_isomorphism, check_morphism, Morphism};
use crate::report::Report;
use crate::reticulation::{functor_on_morphism, reticulate, Reticulation};

/// Largest disjoint union [`colimit`] accepts.
const UNION_LIMIT: usize = 8192;

/// A finite directed family of algebras with coherent morphisms
/// `φ_ij: A_i → A_j` for `i <= j`.
#[derive(Clone, Debug)]
pub struct InductiveSystem<T> {
    algebras: Vec<T>,
    maps: BTreeMap<(usize, usize), Morphism>,
}

impl<T: FiniteAlgebra> InductiveSystem<T> {
    /// Closes the generating maps under composition, adds identities, and
    /// checks that the result is a directed partial order with coherent maps.
    pub fn new(algebras: Vec<T>, edges: Vec<(usize, usize, Morphism)>) -> Result<Self> {
        let k = algebras.len();
        if k == 0 {
            return Err(Error::InvalidSystem("the index set is empty".into()));
        }
        let mut maps: BTreeMap<(usize, usize), Morphism> = BTreeMap::new();
        for (i, a) in algebras.iter().enumerate() {
            maps.insert((i, i), Morphism::identity(T::KIND, a.size()));
        }
        for (i, j, m) in edges {
            if i >= k || j >= k {
                return Err(Error::InvalidSystem(format!("edge {i}->{j} leaves the index set")));
            }
            check_morphism(&algebras[i], &algebras[j], &m)
                .map_err(|e| Error::InvalidSystem(format!("map {i}->{j}: {e}")))?;
            insert(&mut maps, i, j, m.with_kind(T::KIND))?;
        }
        loop {
            let mut added = Vec::new();
            for (&(i, j), f) in &maps {
                for (&(j2, l), g) in maps.range((j, 0)..=(j, k)) {
                    debug_assert_eq!(j, j2);
                    let c = f.then(g);
                    match maps.get(&(i, l)) {
                        Some(h) if *h != c => {
                            return Err(Error::InvalidSystem(format!(
                                "incoherent: two composites {i}->{l} differ"
                            )))
                        }
                        Some(_) => {}
                        None => added.push((i, l, c)),
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            for (i, l, c) in added {
                insert(&mut maps, i, l, c)?;
            }
        }
        for i in 0..k {
            for j in 0..i {
                if maps.contains_key(&(i, j)) && maps.contains_key(&(j, i)) {
                    return Err(Error::InvalidSystem(format!("indices {j} and {i} form a cycle")));
                }
                if !(0..k).any(|u| maps.contains_key(&(i, u)) && maps.contains_key(&(j, u))) {
                    return Err(Error::InvalidSystem(format!("indices {j} and {i} have no upper bound")));
                }
            }
        }
        Ok(InductiveSystem { algebras, maps })
    }

    /// A single algebra repeated over the chain `0 < 1 < ... < len-1`, with identities.
    pub fn constant(a: &T, len: usize) -> Result<Self> {
        let edges = (1..len)
            .map(|i| (i - 1, i, Morphism::identity(T::KIND, a.size())))
            .collect();
        Self::new(vec![a.clone(); len], edges)
    }

    pub fn len(&self) -> usize {
        self.algebras.len()
    }

    pub fn is_empty(&self) -> bool {
        self.algebras.is_empty()
    }

    pub fn algebras(&self) -> &[T] {
        &self.algebras
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.maps.contains_key(&(i, j))
    }

    /// `φ_ij`, defined when `i <= j`.
    pub fn map(&self, i: usize, j: usize) -> Option<&Morphism> {
        self.maps.get(&(i, j))
    }

    /// All `(i, j, φ_ij)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Morphism)> {
        self.maps.iter().filter(|(&(i, j), _)| i != j).map(|(&(i, j), m)| (i, j, m))
    }

    /// The least index above both `i` and `j`.
    fn upper_bound(&self, i: usize, j: usize) -> usize {
        (0..self.len())
            .find(|&u| self.leq(i, u) && self.leq(j, u))
            .expect("directed")
    }
}

fn insert(maps: &mut BTreeMap<(usize, usize), Morphism>, i: usize, j: usize, m: Morphism) -> Result<()> {
    match maps.get(&(i, j)) {
        Some(old) if *old != m => Err(Error::InvalidSystem(format!("two different maps {i}->{j}"))),
        _ => {
            maps.insert((i, j), m);
            Ok(())
        }
    }
}

/// The inductive limit with its injections `φ_i`.
#[derive(Clone, Debug)]
pub struct Colimit<T> {
    pub algebra: T,
    pub injections: Vec<Morphism>,
}

/// The disjoint union of the `A_i` modulo `(i,a) ~ (j,b)` iff
/// `φ_ik(a) = φ_jk(b)` for some `k >= i, j`; operations are computed at a
/// common upper index.
pub fn colimit<T: FiniteAlgebra>(s: &InductiveSystem<T>) -> Result<Colimit<T>> {
    let k = s.len();
    let total: usize = s.algebras.iter().map(|a| a.size()).sum();
    if total > UNION_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "colimit disjoint union",
            size: total,
            limit: UNION_LIMIT,
        });
    }
    let points: Vec<(usize, Elem)> = (0..k)
        .flat_map(|i| (0..s.algebras[i].size()).map(move |a| (i, a)))
        .collect();
    let related = |(i, a): (usize, Elem), (j, b): (usize, Elem)| {
        (0..k).any(|u| match (s.map(i, u), s.map(j, u)) {
            (Some(f), Some(g)) => f.apply(a) == g.apply(b),
            _ => false,
        })
    };
    let mut class_of: BTreeMap<(usize, Elem), usize> = BTreeMap::new();
    let mut reps: Vec<(usize, Elem)> = Vec::new();
    for &p in &points {
        let c = match reps.iter().position(|&r| related(r, p)) {
            Some(c) => c,
            None => {
                reps.push(p);
                reps.len() - 1
            }
        };
        class_of.insert(p, c);
    }
    // ~ must be an equivalence; transitivity is what the directedness buys.
    for &p in &points {
        for &q in &points {
            if (class_of[&p] == class_of[&q]) != related(p, q) {
                return Err(Error::InvalidSystem(format!(
                    "~ is not transitive at ({}, {}) and ({}, {})",
                    p.0, p.1, q.0, q.1
                )));
            }
        }
    }
    let m = reps.len();
    let tables = T::KIND
        .operations()
        .iter()
        .map(|&op| {
            Table::from_fn(m, |x, y| {
                let ((i, a), (j, b)) = (reps[x], reps[y]);
                let u = s.upper_bound(i, j);
                let (fa, fb) = (s.map(i, u).unwrap().apply(a), s.map(j, u).unwrap().apply(b));
                class_of[&(u, s.algebras[u].apply(op, fa, fb))]
            })
        })
        .collect();
    let names = reps
        .iter()
        .map(|&(i, a)| format!("[{}]_{}", s.algebras[i].name(a), i))
        .collect();
    let (b0, t0) = (s.algebras[0].bot(), s.algebras[0].top());
    let st = Structure::new(names, tables, class_of[&(0, b0)], class_of[&(0, t0)])?;
    let algebra = T::from_structure(st)?;
    let injections: Vec<Morphism> = (0..k)
        .map(|i| Morphism::new(T::KIND, (0..s.algebras[i].size()).map(|a| class_of[&(i, a)]).collect()))
        .collect();
    for (i, f) in injections.iter().enumerate() {
        check_morphism(&s.algebras[i], &algebra, f)?;
    }
    for (i, j, m) in s.edges() {
        if m.then(&injections[j]) != injections[i] {
            return Err(Error::Invariant(format!("φ_{j} ∘ φ_{i}{j} != φ_{i}")));
        }
    }
    Ok(Colimit { algebra, injections })
}

/// A target algebra with maps `f_i: A_i → target` such that `f_j ∘ φ_ij = f_i`.
#[derive(Clone, Debug)]
pub struct Cocone<U> {
    pub target: U,
    pub maps: Vec<Morphism>,
}

/// The unique `f` with `f ∘ φ_i = f_i`. Every colimit element is some
/// `φ_i(a)`, so each value is forced; the map is rejected if the forced
/// values disagree or the result is not a morphism.
pub fn mediating_morphism<T: FiniteAlgebra, U: FiniteAlgebra>(
    s: &InductiveSystem<T>,
    c: &Colimit<T>,
    cocone: &Cocone<U>,
) -> Result<Morphism> {
    if cocone.maps.len() != s.len() {
        return Err(Error::InvalidSystem("cocone has the wrong number of maps".into()));
    }
    for (i, j, m) in s.edges() {
        if m.then(&cocone.maps[j]) != cocone.maps[i] {
            return Err(Error::InvalidSystem(format!("not a cocone: f_{j} ∘ φ_{i}{j} != f_{i}")));
        }
    }
    let mut map = vec![usize::MAX; c.algebra.size()];
    for (i, inj) in c.injections.iter().enumerate() {
        for a in 0..s.algebras[i].size() {
            let (x, v) = (inj.apply(a), cocone.maps[i].apply(a));
            if map[x] != usize::MAX && map[x] != v {
                return Err(Error::Invariant(format!(
                    "no mediating map: {} has two forced images",
                    c.algebra.name(x)
                )));
            }
            map[x] = v;
        }
    }
    if map.contains(&usize::MAX) {
        return Err(Error::Invariant("injections are not jointly surjective".into()));
    }
    let f = Morphism::new(T::KIND, map);
    check_morphism(&c.algebra, &cocone.target, &f)?;
    Ok(f)
}

/// Checks that `(L(A), (L(φ_i)))` is an inductive limit of
/// `(L(A_i), L(φ_ij))`: cocone identities, a mediating map for every
/// quotient cocone of `L(A)`, and an isomorphism with the lattice colimit
/// computed directly.
pub fn check_colimit_preservation(s: &InductiveSystem<FiniteResiduatedLattice>) -> Result<Report> {
    let c = colimit(s)?;
    let ra = reticulate(&c.algebra)?;
    let rs = s.algebras.iter().map(reticulate).collect::<Result<Vec<Reticulation>>>()?;
    let edges = s
        .edges()
        .map(|(i, j, m)| Ok((i, j, functor_on_morphism(m, &rs[i], &rs[j])?)))
        .collect::<Result<Vec<_>>>()?;
    let ls: InductiveSystem<FiniteBoundedLattice> =
        InductiveSystem::new(rs.iter().map(|r| r.lattice().clone()).collect(), edges)?;
    let l_inj = c
        .injections
        .iter()
        .zip(&rs)
        .map(|(f, r)| functor_on_morphism(f, r, &ra))
        .collect::<Result<Vec<_>>>()?;

    let mut rep = Report::new(format!("reticulation of an inductive limit over {} indices", s.len()));
    rep.check(
        "L(φ_j) ∘ L(φ_ij) = L(φ_i)",
        ls.edges()
            .find(|&(i, j, m)| m.then(&l_inj[j]) != l_inj[i])
            .map(|(i, j, _)| format!("i={i}, j={j}")),
    );

    let candidate = Cocone {
        target: ra.lattice().clone(),
        maps: l_inj.clone(),
    };
    let direct = colimit(&ls)?;
    let iso = mediating_morphism(&ls, &direct, &candidate).and_then(|m| {
        check_isomorphism(&direct.algebra, ra.lattice(), &m)?;
        Ok(m)
    });
    rep.check(
        "lattice colimit → L(A) mediating map is an isomorphism",
        iso.err().map(|e| e.to_string()),
    );

    // Quotients of L(A) give further cocones; each must factor uniquely
    // through L(A) itself.
    let src = Colimit {
        algebra: ra.lattice().clone(),
        injections: l_inj,
    };
    let mut failure = None;
    let fl = all_filters(ra.lattice())?;
    for f in fl.filters() {
        let (q, p) = quotient(ra.lattice(), f)?;
        let cocone = Cocone {
            target: q,
            maps: src.injections.iter().map(|m| m.then(&p)).collect(),
        };
        match mediating_morphism(&ls, &src, &cocone) {
            Ok(m) if m.map() == p.map() => {}
            Ok(m) => failure = Some(format!("mediating map {:?} differs from {:?}", m.map(), p.map())),
            Err(e) => failure = Some(e.to_string()),
        }
        if failure.is_some() {
            break;
        }
    }
    rep.check(
        format!("unique mediating maps for {} quotient cocones", fl.len()),
        failure,
    );
    Ok(rep)
}

/// The system `A → A/F` over the two-element chain of indices.
#[cfg(test)]
pub(crate) fn projection_system(
    a: &FiniteResiduatedLattice,
    f: &crate::filters::Filter,
) -> Result<InductiveSystem<FiniteResiduatedLattice>> {
    let (q, p) = quotient(a, f)?;
    InductiveSystem::new(vec![a.clone(), q], vec![(0, 1, p)])
}
