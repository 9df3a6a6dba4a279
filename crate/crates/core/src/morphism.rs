//! Carrier maps, their preservation certificates, and isomorphism search.

use crate::algebra::{Elem, FiniteAlgebra, Kind, Op};
use crate::error::{Error, Result};
use crate::par;

/// A carrier map between two finite algebras, tagged with the category it is
/// meant to live in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    kind: Kind,
    map: Vec<Elem>,
}

impl Morphism {
    pub fn new(kind: Kind, map: Vec<Elem>) -> Self {
        Morphism { kind, map }
    }

    pub fn identity(kind: Kind, n: usize) -> Self {
        Morphism {
            kind,
            map: (0..n).collect(),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    pub fn source_size(&self) -> usize {
        self.map.len()
    }

    /// `next ∘ self`. The result has the weaker of the two kinds.
    pub fn then(&self, next: &Morphism) -> Morphism {
        let kind = if self.kind == next.kind {
            self.kind
        } else {
            Kind::BoundedLattice
        };
        Morphism {
            kind,
            map: self.map.iter().map(|&a| next.map[a]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.map.len());
        self.map.iter().all(|a| seen.insert(*a))
    }

    pub fn is_surjective(&self, target_size: usize) -> bool {
        let mut hit = vec![false; target_size];
        for &a in &self.map {
            if a < target_size {
                hit[a] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// The inverse map, when `self` is a bijection onto `0..target_size`.
    pub fn inverse(&self, target_size: usize) -> Option<Morphism> {
        if self.map.len() != target_size {
            return None;
        }
        let mut inv = vec![usize::MAX; target_size];
        for (a, &b) in self.map.iter().enumerate() {
            if b >= target_size || inv[b] != usize::MAX {
                return None;
            }
            inv[b] = a;
        }
        Some(Morphism {
            kind: self.kind,
            map: inv,
        })
    }

    /// Same map, viewed as a morphism of the given kind.
    pub fn with_kind(&self, kind: Kind) -> Morphism {
        Morphism {
            kind,
            map: self.map.clone(),
        }
    }
}

/// Evidence that a map preserved every operation of its kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: Kind,
    pub operations: Vec<&'static str>,
    pub pairs_checked: usize,
}

fn kind_supported<A: FiniteAlgebra>(kind: Kind) -> bool {
    kind == Kind::BoundedLattice || A::KIND == Kind::ResiduatedLattice
}

/// Checks that `m` preserves the constants and every binary operation of its kind.
pub fn check_morphism<A: FiniteAlgebra, B: FiniteAlgebra>(
    source: &A,
    target: &B,
    m: &Morphism,
) -> Result<Certificate> {
    if !kind_supported::<A>(m.kind) || !kind_supported::<B>(m.kind) {
        return Err(Error::Shape(format!(
            "a {} morphism needs residuated endpoints",
            m.kind
        )));
    }
    if m.map.len() != source.size() {
        return Err(Error::Shape(format!(
            "map has {} entries for a source of size {}",
            m.map.len(),
            source.size()
        )));
    }
    if let Some(&bad) = m.map.iter().find(|&&b| b >= target.size()) {
        return Err(Error::Shape(format!(
            "map value {bad} is outside a target of size {}",
            target.size()
        )));
    }
    if m.apply(source.bot()) != target.bot() {
        return Err(Error::OperationNotPreserved {
            op: "bot",
            args: vec![],
        });
    }
    if m.apply(source.top()) != target.top() {
        return Err(Error::OperationNotPreserved {
            op: "top",
            args: vec![],
        });
    }
    let n = source.size();
    let mut names = vec!["bot", "top"];
    for &op in m.kind.operations() {
        let bad = par::find_first(n, |a| {
            (0..n)
                .find(|&b| m.apply(source.apply(op, a, b)) != target.apply(op, m.apply(a), m.apply(b)))
                .map(|b| vec![a, b])
        });
        if let Some(args) = bad {
            return Err(Error::OperationNotPreserved { op: op.name(), args });
        }
        names.push(op.name());
    }
    Ok(Certificate {
        kind: m.kind,
        operations: names,
        pairs_checked: n * n * m.kind.operations().len(),
    })
}

/// Checks that `m` is bijective and that both it and its inverse are morphisms.
pub fn check_isomorphism<A: FiniteAlgebra, B: FiniteAlgebra>(
    source: &A,
    target: &B,
    m: &Morphism,
) -> Result<(Certificate, Certificate)> {
    let inv = m
        .inverse(target.size())
        .ok_or_else(|| Error::Invariant("map is not a bijection".into()))?;
    Ok((
        check_morphism(source, target, m)?,
        check_morphism(target, source, &inv)?,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest carrier the search accepts on either side.
    pub max_size: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_size: 64 }
    }
}

/// Per-element invariants that any isomorphism of the given kind preserves.
fn signatures<A: FiniteAlgebra>(a: &A, kind: Kind) -> Vec<Vec<usize>> {
    let n = a.size();
    let down: Vec<usize> = (0..n).map(|x| (0..n).filter(|&y| a.leq(y, x)).count()).collect();
    let covers = a.covers();
    let mut lower = vec![0; n];
    let mut upper = vec![0; n];
    for &(l, u) in &covers {
        upper[l] += 1;
        lower[u] += 1;
    }
    // Longest chains from the bottom and to the top, via covers in order of down-set size.
    let mut by_height: Vec<Elem> = (0..n).collect();
    by_height.sort_by_key(|&x| down[x]);
    let mut height = vec![0usize; n];
    for &x in &by_height {
        for &(l, u) in &covers {
            if u == x {
                height[x] = height[x].max(height[l] + 1);
            }
        }
    }
    let mut depth = vec![0usize; n];
    for &x in by_height.iter().rev() {
        for &(l, u) in &covers {
            if l == x {
                depth[x] = depth[x].max(depth[u] + 1);
            }
        }
    }
    (0..n)
        .map(|x| {
            let up = (0..n).filter(|&y| a.leq(x, y)).count();
            let mut sig = vec![down[x], up, lower[x], upper[x], height[x], depth[x]];
            if kind == Kind::ResiduatedLattice {
                let (p, k) = a.stable_power(x);
                let neg = a.apply(Op::Imp, x, a.bot());
                sig.extend([
                    k,
                    down[p],
                    down[neg],
                    usize::from(a.apply(Op::Imp, neg, a.bot()) == x),
                ]);
            }
            sig
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Iso,
    Embed,
}

struct Search<'a, A, B> {
    x: &'a A,
    y: &'a B,
    ops: &'static [Op],
    mode: Mode,
    sig_x: Vec<Vec<usize>>,
    sig_y: Vec<Vec<usize>>,
    gens: Vec<Elem>,
}

const NONE: usize = usize::MAX;

impl<'a, A: FiniteAlgebra, B: FiniteAlgebra> Search<'a, A, B> {
    /// Extends the forced assignments (constants plus chosen generator
    /// images) to the generated subalgebra; `None` on any conflict.
    fn propagate(&self, chosen: &[Elem]) -> Option<Vec<Elem>> {
        let (x, y) = (self.x, self.y);
        let mut img = vec![NONE; x.size()];
        let mut inv = vec![NONE; y.size()];
        let mut order: Vec<Elem> = Vec::new();
        let mut assign = |a: Elem, b: Elem, img: &mut Vec<Elem>, order: &mut Vec<Elem>| -> bool {
            if img[a] != NONE {
                return img[a] == b;
            }
            if inv[b] != NONE {
                return false;
            }
            if self.mode == Mode::Iso && self.sig_x[a] != self.sig_y[b] {
                return false;
            }
            img[a] = b;
            inv[b] = a;
            order.push(a);
            true
        };
        let seeds = [(x.bot(), y.bot()), (x.top(), y.top())]
            .into_iter()
            .chain(self.gens.iter().copied().zip(chosen.iter().copied()));
        for (a, b) in seeds {
            if !assign(a, b, &mut img, &mut order) {
                return None;
            }
        }
        let mut i = 0;
        while i < order.len() {
            let a = order[i];
            for j in 0..=i {
                let b = order[j];
                for &op in self.ops {
                    let (fa, fb) = (img[a], img[b]);
                    if !assign(x.apply(op, a, b), y.apply(op, fa, fb), &mut img, &mut order) {
                        return None;
                    }
                    if !op.is_commutative()
                        && !assign(x.apply(op, b, a), y.apply(op, fb, fa), &mut img, &mut order)
                    {
                        return None;
                    }
                }
            }
            i += 1;
        }
        Some(img)
    }

    fn candidates(&self, g: Elem) -> Vec<Elem> {
        match self.mode {
            Mode::Iso => self.y.elements().filter(|&b| self.sig_y[b] == self.sig_x[g]).collect(),
            Mode::Embed => self.y.elements().collect(),
        }
    }

    fn dfs(&self, chosen: &mut Vec<Elem>) -> Option<Vec<Elem>> {
        let img = self.propagate(chosen)?;
        if chosen.len() == self.gens.len() {
            return Some(img);
        }
        let g = self.gens[chosen.len()];
        if img[g] != NONE {
            chosen.push(img[g]);
            let r = self.dfs(chosen);
            chosen.pop();
            return r;
        }
        for b in self.candidates(g) {
            chosen.push(b);
            let r = self.dfs(chosen);
            chosen.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }

    fn run(&self) -> Option<Vec<Elem>> {
        if self.gens.is_empty() {
            return self.propagate(&[]);
        }
        let first = self.candidates(self.gens[0]);
        par::find_first(first.len(), |i| {
            let mut chosen = vec![first[i]];
            self.dfs(&mut chosen)
        })
    }
}

/// A small generating set: every element is reachable from these and the
/// constants under the operations of `kind`.
fn generators<A: FiniteAlgebra>(a: &A, ops: &[Op]) -> Vec<Elem> {
    let n = a.size();
    let mut order: Vec<Elem> = (0..n).collect();
    let down = |x: Elem| (0..n).filter(|&y| a.leq(y, x)).count();
    order.sort_by_key(|&x| (down(x), x));
    let mut inside = vec![false; n];
    let mut members: Vec<Elem> = Vec::new();
    let mut gens = Vec::new();
    let add = |e: Elem, inside: &mut Vec<bool>, members: &mut Vec<Elem>| {
        if !inside[e] {
            inside[e] = true;
            members.push(e);
        }
    };
    add(a.bot(), &mut inside, &mut members);
    add(a.top(), &mut inside, &mut members);
    let mut processed = 0;
    for &e in &order {
        if inside[e] {
            continue;
        }
        gens.push(e);
        add(e, &mut inside, &mut members);
        // Close incrementally: pair every new member with all earlier ones.
        while processed < members.len() {
            let p = members[processed];
            for q in 0..=processed {
                let q = members[q];
                for &op in ops {
                    add(a.apply(op, p, q), &mut inside, &mut members);
                    add(a.apply(op, q, p), &mut inside, &mut members);
                }
            }
            processed += 1;
        }
    }
    gens
}

fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v
}

fn search<A: FiniteAlgebra, B: FiniteAlgebra>(
    x: &A,
    y: &B,
    kind: Kind,
    mode: Mode,
    opts: &SearchOptions,
) -> Result<Option<Morphism>> {
    if !kind_supported::<A>(kind) || !kind_supported::<B>(kind) {
        return Err(Error::Shape(format!("{kind} search needs residuated algebras")));
    }
    for size in [x.size(), y.size()] {
        if size > opts.max_size {
            return Err(Error::SizeLimitExceeded {
                what: "morphism search",
                size,
                limit: opts.max_size,
            });
        }
    }
    let sig_x = signatures(x, kind);
    let sig_y = signatures(y, kind);
    if mode == Mode::Iso
        && (x.size() != y.size() || sorted(sig_x.clone()) != sorted(sig_y.clone()))
    {
        return Ok(None);
    }
    if mode == Mode::Embed && x.size() > y.size() {
        return Ok(None);
    }
    let ops = kind.operations();
    let s = Search {
        x,
        y,
        ops,
        mode,
        sig_x,
        sig_y,
        gens: generators(x, ops),
    };
    let Some(img) = s.run() else {
        return Ok(None);
    };
    debug_assert!(img.iter().all(|&b| b != NONE));
    let m = Morphism::new(kind, img);
    match mode {
        Mode::Iso => {
            check_isomorphism(x, y, &m)?;
        }
        Mode::Embed => {
            check_morphism(x, y, &m)?;
            if !m.is_injective() {
                return Err(Error::Invariant("embedding search produced a non-injective map".into()));
            }
        }
    }
    Ok(Some(m))
}

/// Searches exhaustively for an isomorphism of the given kind.
///
/// Candidate images are restricted to elements with the same order profile
/// (down-set and up-set sizes, cover degrees, height, depth; plus power and
/// negation data for residuated lattices). Only the images of a generating
/// set are branched on; everything else is forced by the operations.
pub fn find_isomorphism<A: FiniteAlgebra, B: FiniteAlgebra>(
    x: &A,
    y: &B,
    kind: Kind,
    opts: &SearchOptions,
) -> Result<Option<Morphism>> {
    search(x, y, kind, Mode::Iso, opts)
}

/// Searches exhaustively for an injective morphism of the given kind.
pub fn find_embedding<A: FiniteAlgebra, B: FiniteAlgebra>(
    x: &A,
    y: &B,
    kind: Kind,
    opts: &SearchOptions,
) -> Result<Option<Morphism>> {
    search(x, y, kind, Mode::Embed, opts)
}
