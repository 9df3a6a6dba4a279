//! Filters, the filter lattice, and quotients by filters.
//!
//! The same code serves both structure kinds: a filter is a nonempty
//! up-closed set closed under [`FiniteAlgebra::fuse`] (product for residuated
//! lattices, meet for lattices).

use fixedbitset::FixedBitSet;

use crate::algebra::{Elem, FiniteAlgebra, Kind, Op, FiniteBoundedLattice, FiniteResiduatedLattice, Structure, Table};
use crate::error::{Error, Result};
use crate::morphism::{check_morphism, Morphism};
use crate::par;
use crate::report::Report;

/// Above this carrier size [`all_filters`] switches from the subset scan to
/// generation from principal filters.
pub const SUBSET_SCAN_THRESHOLD: usize = 12;

/// Hard cap for [`filters_by_subset_scan`].
pub const SUBSET_SCAN_MAX: usize = 24;

/// A set of elements of some host algebra.
pub fn subset<A: FiniteAlgebra>(host: &A, elems: impl IntoIterator<Item = Elem>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(host.size());
    for e in elems {
        s.insert(e);
    }
    s
}

/// A filter of a host algebra, stored as its membership set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filter {
    members: FixedBitSet,
}

impl Filter {
    /// Wraps a set the caller knows to be a filter.
    pub(crate) fn trusted(members: FixedBitSet) -> Self {
        Filter { members }
    }

    pub fn new<A: FiniteAlgebra>(host: &A, members: FixedBitSet) -> Result<Self> {
        if members.len() != host.size() {
            return Err(Error::NotAFilter(format!(
                "membership vector has length {}, host has {} elements",
                members.len(),
                host.size()
            )));
        }
        if !is_filter(host, &members) {
            return Err(Error::NotAFilter(host.format_set(members.ones())));
        }
        Ok(Filter { members })
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn members(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn as_set(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Intersections of filters are filters.
    pub fn intersection(&self, other: &Filter) -> Filter {
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Filter { members: m }
    }

    /// Canonical ordering key: size first, then members.
    pub(crate) fn sort_key(&self) -> (usize, Vec<Elem>) {
        (self.len(), self.to_vec())
    }
}

pub fn up_set<A: FiniteAlgebra>(host: &A, a: Elem) -> FixedBitSet {
    subset(host, host.elements().filter(|&b| host.leq(a, b)))
}

pub fn is_filter<A: FiniteAlgebra>(host: &A, s: &FixedBitSet) -> bool {
    if s.is_clear() {
        return false;
    }
    let members: Vec<Elem> = s.ones().collect();
    let up_closed = members
        .iter()
        .all(|&a| host.elements().all(|b| !host.leq(a, b) || s.contains(b)));
    up_closed
        && members
            .iter()
            .all(|&a| members.iter().all(|&b| s.contains(host.fuse(a, b))))
}

/// The least filter containing `xs`; `{top}` when `xs` is empty.
pub fn generated_filter<A: FiniteAlgebra>(host: &A, xs: impl IntoIterator<Item = Elem>) -> Filter {
    let mut s = subset(host, xs);
    s.insert(host.top());
    loop {
        let before = s.count_ones(..);
        let members: Vec<Elem> = s.ones().collect();
        for &a in &members {
            for &b in &members {
                s.insert(host.fuse(a, b));
            }
        }
        let members: Vec<Elem> = s.ones().collect();
        for a in members {
            s.union_with(&up_set(host, a));
        }
        if s.count_ones(..) == before {
            return Filter { members: s };
        }
    }
}

/// `<a> = { b : a^n <= b for some n >= 1 }`, computed as the up-set of the
/// stable power of `a`.
pub fn principal_filter<A: FiniteAlgebra>(host: &A, a: Elem) -> Filter {
    let (p, _) = host.stable_power(a);
    Filter {
        members: up_set(host, p),
    }
}

/// `<F u G>`
pub fn filter_join<A: FiniteAlgebra>(host: &A, f: &Filter, g: &Filter) -> Filter {
    generated_filter(host, f.members().chain(g.members()))
}

/// All filters, found by testing every subset of the carrier.
pub fn filters_by_subset_scan<A: FiniteAlgebra>(host: &A) -> Result<Vec<Filter>> {
    let n = host.size();
    if n > SUBSET_SCAN_MAX {
        return Err(Error::SizeLimitExceeded {
            what: "filter subset scan",
            size: n,
            limit: SUBSET_SCAN_MAX,
        });
    }
    let up: Vec<u64> = host
        .elements()
        .map(|a| host.elements().filter(|&b| host.leq(a, b)).fold(0u64, |m, b| m | 1 << b))
        .collect();
    let fuse: Vec<Vec<Elem>> = host
        .elements()
        .map(|a| host.elements().map(|b| host.fuse(a, b)).collect())
        .collect();
    let hits = par::filter_indices(1usize << n, |mask| {
        let mask = mask as u64;
        if mask == 0 {
            return false;
        }
        let bits = |m: u64| (0..n).filter(move |&i| m >> i & 1 == 1);
        bits(mask).all(|a| up[a] & !mask == 0)
            && bits(mask).all(|a| bits(mask).all(|b| mask >> fuse[a][b] & 1 == 1))
    });
    let mut out: Vec<Filter> = hits
        .into_iter()
        .map(|mask| Filter {
            members: subset(host, (0..n).filter(|&i| mask >> i & 1 == 1)),
        })
        .collect();
    out.sort_by_key(Filter::sort_key);
    Ok(out)
}

/// All filters, found by closing the principal filters under intersection
/// and filter join.
pub fn filters_by_generation<A: FiniteAlgebra>(host: &A) -> Vec<Filter> {
    let mut found: Vec<Filter> = Vec::new();
    let push = |f: Filter, found: &mut Vec<Filter>| {
        if !found.contains(&f) {
            found.push(f);
        }
    };
    for a in host.elements() {
        push(principal_filter(host, a), &mut found);
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let meet = found[i].intersection(&found[j]);
            let join = filter_join(host, &found[i], &found[j]);
            push(meet, &mut found);
            push(join, &mut found);
        }
        i += 1;
    }
    found.sort_by_key(Filter::sort_key);
    found
}

/// The filters of a host ordered by inclusion, as a bounded distributive lattice.
#[derive(Clone, Debug)]
pub struct FilterLattice {
    filters: Vec<Filter>,
    lattice: FiniteBoundedLattice,
}

impl FilterLattice {
    pub fn filters(&self) -> &[Filter] {
        &self.filters
    }

    pub fn lattice(&self) -> &FiniteBoundedLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn index_of(&self, f: &Filter) -> Option<usize> {
        self.filters.iter().position(|g| g == f)
    }

    pub fn filter(&self, i: usize) -> &Filter {
        &self.filters[i]
    }
}

/// Builds the lattice on a complete list of filters: meet is intersection,
/// join is the generated filter, `{top}` is the bottom and the carrier the top.
pub fn filter_lattice<A: FiniteAlgebra>(host: &A, filters: Vec<Filter>) -> Result<FilterLattice> {
    let k = filters.len();
    let find = |f: &Filter| {
        filters
            .iter()
            .position(|g| g == f)
            .ok_or_else(|| Error::Invariant(format!("filter {} missing from the list", host.format_set(f.members()))))
    };
    let mut join = Vec::with_capacity(k * k);
    let mut meet = Vec::with_capacity(k * k);
    for f in &filters {
        for g in &filters {
            join.push(find(&filter_join(host, f, g))?);
            meet.push(find(&f.intersection(g))?);
        }
    }
    let bot = find(&generated_filter(host, []))?;
    let top = find(&Filter {
        members: subset(host, host.elements()),
    })?;
    let names = filters.iter().map(|f| host.format_set(f.members())).collect();
    let s = Structure::new(
        names,
        vec![Table::from_cells(k, join), Table::from_cells(k, meet)],
        bot,
        top,
    )?;
    Ok(FilterLattice {
        filters,
        lattice: FiniteBoundedLattice::from_structure(s)?,
    })
}

/// Enumerates every filter (subset scan up to [`SUBSET_SCAN_THRESHOLD`]
/// elements, generation above) and builds the filter lattice.
pub fn all_filters<A: FiniteAlgebra>(host: &A) -> Result<FilterLattice> {
    let filters = if host.size() <= SUBSET_SCAN_THRESHOLD {
        filters_by_subset_scan(host)?
    } else {
        filters_by_generation(host)
    };
    filter_lattice(host, filters)
}

/// Checks `<a> ∩ <b> = <a v b>` for every pair.
pub fn principal_meet_is_join(a: &FiniteResiduatedLattice) -> Report {
    let pf: Vec<Filter> = a.elements().map(|x| principal_filter(a, x)).collect();
    let n = a.size();
    let bad = par::find_first(n, |x| {
        (0..n)
            .find(|&y| pf[x].intersection(&pf[y]) != pf[a.join(x, y)])
            .map(|y| (x, y))
    });
    let mut r = Report::new("principal filters: <a> ∩ <b> = <a v b>");
    r.check(
        format!("all {} pairs", n * n),
        bad.map(|(x, y)| format!("fails at a={}, b={}", a.name(x), a.name(y))),
    );
    r
}

/// Quotient by an equivalence that is a congruence. Classes are numbered by
/// their least member and named after their largest one (the join of the
/// class), so the top class prints as `1/F`.
fn quotient_by<A: FiniteAlgebra>(
    host: &A,
    same: impl Fn(Elem, Elem) -> bool,
) -> Result<(A, Morphism)> {
    let n = host.size();
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<Elem> = Vec::new();
    for a in 0..n {
        match reps.iter().position(|&r| same(r, a)) {
            Some(c) => class[a] = c,
            None => {
                class[a] = reps.len();
                reps.push(a);
            }
        }
    }
    let k = reps.len();
    let tables = A::KIND
        .operations()
        .iter()
        .map(|&op| Table::from_fn(k, |i, j| class[host.apply(op, reps[i], reps[j])]))
        .collect();
    let mut greatest = reps.clone();
    for a in 0..n {
        greatest[class[a]] = host.join(greatest[class[a]], a);
    }
    let names = greatest.iter().map(|&g| format!("{}/F", host.name(g))).collect();
    let s = Structure::new(names, tables, class[host.bot()], class[host.top()])?;
    let q = A::from_structure(s)?;
    let proj = Morphism::new(A::KIND, class);
    check_morphism(host, &q, &proj)?;
    Ok((q, proj))
}

/// Quotient by a filter, dispatching on the structure kind: for residuated
/// lattices `a ≡ b` iff `a <-> b ∈ F`, for lattices iff `a ^ e = b ^ e` for
/// some `e ∈ F`. Returns the quotient and the projection `a ↦ a/F`.
pub fn quotient<A: FiniteAlgebra>(host: &A, f: &Filter) -> Result<(A, Morphism)> {
    if f.as_set().len() != host.size() || !is_filter(host, f.as_set()) {
        return Err(Error::NotAFilter(host.format_set(f.members())));
    }
    match A::KIND {
        Kind::ResiduatedLattice => quotient_by(host, |x, y| {
            f.contains(host.meet(host.apply(Op::Imp, x, y), host.apply(Op::Imp, y, x)))
        }),
        Kind::BoundedLattice => {
            quotient_by(host, |x, y| f.members().any(|e| host.meet(x, e) == host.meet(y, e)))
        }
    }
}

pub fn quotient_rl(a: &FiniteResiduatedLattice, f: &Filter) -> Result<(FiniteResiduatedLattice, Morphism)> {
    quotient(a, f)
}

pub fn quotient_lattice(l: &FiniteBoundedLattice, f: &Filter) -> Result<(FiniteBoundedLattice, Morphism)> {
    quotient(l, f)
}
