//! Co-annihilators, the Boolean algebra `Co-Ann(A)`, Stone-type conditions,
//! and the checks that they transfer along the reticulation.

use crate::algebra::{
    boolean_center, pseudocomplement, Elem, FiniteAlgebra, FiniteBoundedLattice, FiniteResiduatedLattice, Kind,
    Structure, Table,
};
use crate::error::{Error, Result};
use crate::filters::{all_filters, filter_join, principal_filter, subset, Filter};
use crate::morphism::{check_isomorphism, find_embedding, Morphism, SearchOptions};
use crate::par;
use crate::report::Report;
use crate::reticulation::Reticulation;

/// Largest carrier for which subsets are enumerated outright.
pub const SUBSET_LIMIT: usize = 20;

/// `X^⊤ = { a : a v x = 1 for all x ∈ X }`; the empty set gives the carrier.
pub fn co_annihilator<A: FiniteAlgebra>(host: &A, xs: impl IntoIterator<Item = Elem>) -> Filter {
    let xs: Vec<Elem> = xs.into_iter().collect();
    let members = subset(
        host,
        host.elements().filter(|&a| xs.iter().all(|&x| host.join(a, x) == host.top())),
    );
    Filter::trusted(members)
}

/// `F^⊤` for a filter `F`.
pub fn co_annihilator_of<A: FiniteAlgebra>(host: &A, f: &Filter) -> Filter {
    co_annihilator(host, f.members())
}

/// The outcome of a universally quantified check, with the first
/// counterexample found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<W> {
    pub counterexample: Option<W>,
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    fn from(counterexample: Option<W>) -> Self {
        Verdict { counterexample }
    }
}

/// `(Co-Ann(A), v^⊤, ∩, ^⊤, {1}, A)`.
#[derive(Clone, Debug)]
pub struct CoAnnihilatorAlgebra {
    members: Vec<Filter>,
    lattice: FiniteBoundedLattice,
}

impl CoAnnihilatorAlgebra {
    pub fn members(&self) -> &[Filter] {
        &self.members
    }

    pub fn lattice(&self) -> &FiniteBoundedLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, f: &Filter) -> Option<usize> {
        self.members.iter().position(|g| g == f)
    }

    /// Exhaustive scan of the Boolean algebra laws, in terms of the filters.
    pub fn check_boolean<A: FiniteAlgebra>(&self, host: &A) -> Report {
        let k = self.len();
        let l = &self.lattice;
        let top = |f: &Filter| co_annihilator_of(host, f);
        let ones = generated_top(host);
        let carrier = Filter::trusted(subset(host, host.elements()));
        let name = |i: usize| l.name(i).to_string();
        let mut r = Report::new("Co-Ann is a Boolean algebra");
        r.check(
            "F^⊤⊤ = F",
            (0..k)
                .find(|&i| top(&top(&self.members[i])) != self.members[i])
                .map(name),
        );
        r.check(
            "F ∩ F^⊤ = {1} and F v^⊤ F^⊤ = A",
            (0..k)
                .find(|&i| {
                    let c = top(&self.members[i]);
                    let j = self.index_of(&c).expect("closed under ^⊤");
                    self.members[i].intersection(&c) != ones || self.members[l.join(i, j)] != carrier
                })
                .map(name),
        );
        r.check(
            "(F ∩ G)^⊤ = F^⊤ v^⊤ G^⊤",
            (0..k)
                .flat_map(|i| (0..k).map(move |j| (i, j)))
                .find(|&(i, j)| {
                    let lhs = top(&self.members[l.meet(i, j)]);
                    let fi = self.index_of(&top(&self.members[i])).expect("closed");
                    let fj = self.index_of(&top(&self.members[j])).expect("closed");
                    lhs != self.members[l.join(fi, fj)]
                })
                .map(|(i, j)| format!("{}, {}", name(i), name(j))),
        );
        r.check(
            "every element is complemented",
            (crate::algebra::boolean_center(l).len() != k).then(|| "some element has no complement".into()),
        );
        r
    }
}

fn generated_top<A: FiniteAlgebra>(host: &A) -> Filter {
    Filter::trusted(subset(host, [host.top()]))
}

fn sort_filters(v: &mut Vec<Filter>) {
    v.sort_by_key(|f| (f.len(), f.to_vec()));
    v.dedup();
}

fn co_ann_lattice<A: FiniteAlgebra>(host: &A, members: Vec<Filter>) -> Result<CoAnnihilatorAlgebra> {
    let k = members.len();
    let find = |f: &Filter| {
        members
            .iter()
            .position(|g| g == f)
            .ok_or_else(|| Error::Invariant(format!("{} is not a co-annihilator", host.format_set(f.members()))))
    };
    let comp: Vec<Filter> = members.iter().map(|f| co_annihilator_of(host, f)).collect();
    let mut meet = Vec::with_capacity(k * k);
    let mut join = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            meet.push(find(&members[i].intersection(&members[j]))?);
            join.push(find(&co_annihilator_of(host, &comp[i].intersection(&comp[j])))?);
        }
    }
    let names = members.iter().map(|f| host.format_set(f.members())).collect();
    let bot = find(&generated_top(host))?;
    let top = find(&Filter::trusted(subset(host, host.elements())))?;
    let s = Structure::new(names, vec![Table::from_cells(k, join), Table::from_cells(k, meet)], bot, top)?;
    Ok(CoAnnihilatorAlgebra {
        members,
        lattice: FiniteBoundedLattice::from_structure(s)?,
    })
}

/// Co-Ann(A), generated from the singleton co-annihilators and the carrier
/// by closing under `∩` and `^⊤`.
pub fn co_ann_algebra<A: FiniteAlgebra>(host: &A) -> Result<CoAnnihilatorAlgebra> {
    let mut members: Vec<Filter> = host.elements().map(|x| co_annihilator(host, [x])).collect();
    members.push(co_annihilator(host, []));
    sort_filters(&mut members);
    loop {
        let before = members.len();
        let mut next = members.clone();
        for f in &members {
            next.push(co_annihilator_of(host, f));
            for g in &members {
                next.push(f.intersection(g));
            }
        }
        sort_filters(&mut next);
        members = next;
        if members.len() == before {
            break;
        }
    }
    co_ann_lattice(host, members)
}

/// Co-Ann(A) as `{ X^⊤ : X ⊆ A }` over all `2^n` subsets.
pub fn co_ann_by_subsets<A: FiniteAlgebra>(host: &A) -> Result<Vec<Filter>> {
    let n = host.size();
    if n > SUBSET_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "co-annihilator subset scan",
            size: n,
            limit: SUBSET_LIMIT,
        });
    }
    let single = singleton_masks(host);
    let all = (1u64 << n) - 1;
    let masks = par::map(1usize << n, |x| {
        (0..n).filter(|i| x >> i & 1 == 1).fold(all, |acc, i| acc & single[i])
    });
    let mut masks: Vec<u64> = masks;
    masks.sort_unstable();
    masks.dedup();
    let mut out: Vec<Filter> = masks
        .into_iter()
        .map(|m| Filter::trusted(subset(host, (0..n).filter(|i| m >> i & 1 == 1))))
        .collect();
    sort_filters(&mut out);
    Ok(out)
}

fn singleton_masks<A: FiniteAlgebra>(host: &A) -> Vec<u64> {
    host.elements()
        .map(|x| {
            host.elements()
                .filter(|&a| host.join(a, x) == host.top())
                .fold(0u64, |m, a| m | 1 << a)
        })
        .collect()
}

/// The Boolean-centre element `e` with `F = <e>`, if any.
fn boolean_generator<A: FiniteAlgebra>(host: &A, center: &[Elem], f: &Filter) -> Option<Elem> {
    center.iter().copied().find(|&e| principal_filter(host, e) == *f)
}

/// Stone: every `a^⊤` is `<e>` for some `e ∈ B(A)`. The counterexample is
/// the first `a` for which no such `e` exists.
pub fn is_stone<A: FiniteAlgebra>(host: &A) -> Verdict<Elem> {
    let center = boolean_center(host);
    Verdict::from(
        host.elements()
            .find(|&a| boolean_generator(host, center.elements(), &co_annihilator(host, [a])).is_none()),
    )
}

/// Strongly Stone: every `X^⊤` is `<e>` for some `e ∈ B(A)`. Since the
/// sets `X^⊤` are exactly the members of Co-Ann(A), those are what is
/// quantified over; the counterexample is a co-annihilator.
pub fn is_strongly_stone<A: FiniteAlgebra>(host: &A) -> Result<Verdict<Filter>> {
    let center = boolean_center(host);
    let ca = co_ann_algebra(host)?;
    Ok(Verdict::from(
        ca.members
            .iter()
            .find(|f| boolean_generator(host, center.elements(), f).is_none())
            .cloned(),
    ))
}

/// [`is_strongly_stone`] by enumerating all `2^n` subsets `X`; the
/// counterexample is the subset.
pub fn is_strongly_stone_by_subsets<A: FiniteAlgebra>(host: &A) -> Result<Verdict<Vec<Elem>>> {
    let n = host.size();
    if n > SUBSET_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "strongly Stone subset scan",
            size: n,
            limit: SUBSET_LIMIT,
        });
    }
    let center = boolean_center(host);
    let single = singleton_masks(host);
    let generated: Vec<u64> = center
        .elements()
        .iter()
        .map(|&e| principal_filter(host, e).members().fold(0u64, |m, a| m | 1 << a))
        .collect();
    let all = (1u64 << n) - 1;
    let bad = par::find_first(1usize << n, |x| {
        let ann = (0..n).filter(|i| x >> i & 1 == 1).fold(all, |acc, i| acc & single[i]);
        (!generated.contains(&ann)).then_some(x)
    });
    Ok(Verdict::from(bad.map(|x| (0..n).filter(|i| x >> i & 1 == 1).collect())))
}

/// The five conditions characterizing m-Stone structures, evaluated
/// independently. For finite algebras every subset has size at most `m`,
/// and every completeness requirement holds automatically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MStoneReport {
    /// every `X^⊤` is `<e>` with `e ∈ B(A)`
    pub i: bool,
    /// Stone, and `B(A)` complete
    pub ii: bool,
    /// `A^⊤⊤` is closed under the operations of `F(A)` and Boolean there
    pub iii_subset: bool,
    /// `A^⊤⊤` is a Boolean algebra that embeds into `F(A)`
    pub iii_embedding: bool,
    /// `(a v b)^⊤ = a^⊤ v b^⊤` (join in `F(A)`), and every `X^⊤⊤` is some `x^⊤`.
    /// The meet form fails at `a = 1` on every nontrivial algebra, since `^⊤` is monotone.
    pub iv: bool,
    /// `X^⊤ v X^⊤⊤ = A`
    pub v: bool,
}

impl MStoneReport {
    pub fn values(&self) -> [bool; 6] {
        [self.i, self.ii, self.iii_subset, self.iii_embedding, self.iv, self.v]
    }

    /// All conditions, under both readings of (iii), agree.
    pub fn agreement(&self) -> bool {
        let v = self.values();
        v.iter().all(|&x| x == v[0])
    }

    pub fn all_hold(&self) -> bool {
        self.values().iter().all(|&x| x)
    }
}

/// `A^⊤⊤ = { a^⊤⊤ : a ∈ A }` with its induced lattice, when it is closed
/// under the given binary operations on filters.
fn closed_family<A: FiniteAlgebra>(
    host: &A,
    family: &[Filter],
    meet: impl Fn(&Filter, &Filter) -> Filter,
    join: impl Fn(&Filter, &Filter) -> Filter,
) -> Option<FiniteBoundedLattice> {
    let k = family.len();
    let find = |f: &Filter| family.iter().position(|g| g == f);
    let mut j = Vec::with_capacity(k * k);
    let mut m = Vec::with_capacity(k * k);
    for x in family {
        for y in family {
            j.push(find(&join(x, y))?);
            m.push(find(&meet(x, y))?);
        }
    }
    let bot = find(&generated_top(host))?;
    let top = find(&Filter::trusted(subset(host, host.elements())))?;
    let names = family.iter().map(|f| host.format_set(f.members())).collect();
    let s = Structure::new(names, vec![Table::from_cells(k, j), Table::from_cells(k, m)], bot, top).ok()?;
    FiniteBoundedLattice::from_structure(s).ok()
}

fn is_boolean_lattice(l: &FiniteBoundedLattice) -> bool {
    boolean_center(l).len() == l.size()
}

pub fn m_stone_conditions<A: FiniteAlgebra>(host: &A, opts: &SearchOptions) -> Result<MStoneReport> {
    let ca = co_ann_algebra(host)?;
    let fl = all_filters(host)?;
    let carrier = Filter::trusted(subset(host, host.elements()));
    let top = |f: &Filter| co_annihilator_of(host, f);
    let single: Vec<Filter> = host.elements().map(|x| co_annihilator(host, [x])).collect();

    let i = is_strongly_stone(host)?.holds();
    let ii = is_stone(host).holds();

    let mut family: Vec<Filter> = single.iter().map(top).collect();
    sort_filters(&mut family);
    let as_filter_sublattice = closed_family(host, &family, |f, g| f.intersection(g), |f, g| filter_join(host, f, g));
    let iii_subset = as_filter_sublattice.as_ref().is_some_and(is_boolean_lattice);
    let in_co_ann = closed_family(host, &family, |f, g| f.intersection(g), |f, g| top(&top(f).intersection(&top(g))));
    let iii_embedding = match in_co_ann.filter(is_boolean_lattice) {
        Some(b) => find_embedding(&b, fl.lattice(), Kind::BoundedLattice, opts)?.is_some(),
        None => false,
    };

    let n = host.size();
    let iv = (0..n).all(|a| {
        (0..n).all(|b| co_annihilator(host, [host.join(a, b)]) == filter_join(host, &single[a], &single[b]))
    }) && ca.members.iter().all(|f| single.contains(&top(f)));
    let v = ca.members.iter().all(|f| filter_join(host, f, &top(f)) == carrier);
    Ok(MStoneReport {
        i,
        ii,
        iii_subset,
        iii_embedding,
        iv,
        v,
    })
}

/// Checks that the Stone-type properties, the Boolean centre, the
/// co-annihilators and their algebra all transfer along `λ`.
pub fn transfer_checks(r: &Reticulation, opts: &SearchOptions) -> Result<Report> {
    let a = r.source();
    let l = r.lattice();
    let mut rep = Report::new("transfer along the reticulation");

    let (sa, sl) = (is_stone(a).holds(), is_stone(l).holds());
    rep.check("(a) Stone iff L(A) Stone", (sa != sl).then(|| format!("A: {sa}, L(A): {sl}")));
    let (ta, tl) = (is_strongly_stone(a)?.holds(), is_strongly_stone(l)?.holds());
    rep.check(
        "(b) strongly Stone iff L(A) strongly Stone",
        (ta != tl).then(|| format!("A: {ta}, L(A): {tl}")),
    );
    let (ma, ml) = (m_stone_conditions(a, opts)?, m_stone_conditions(l, opts)?);
    rep.check(
        "(c) m-Stone conditions agree with L(A)",
        (ma != ml || !ma.agreement()).then(|| format!("A: {:?}, L(A): {:?}", ma.values(), ml.values())),
    );

    let (ba, bl) = (boolean_center(a), boolean_center(l));
    let restricted: Result<Morphism> = ba
        .elements()
        .iter()
        .map(|&e| {
            bl.elements()
                .iter()
                .position(|&x| x == r.lambda_of(e))
                .ok_or_else(|| Error::Invariant(format!("λ({}) is not complemented", a.name(e))))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|map| {
            let m = Morphism::new(Kind::BoundedLattice, map);
            check_isomorphism(&ba.as_lattice(a)?, &bl.as_lattice(l)?, &m)?;
            Ok(m)
        });
    rep.check("(d) λ: B(A) → B(L(A)) is an isomorphism", restricted.err().map(|e| e.to_string()));

    let mu = co_ann_algebra(a).and_then(|ca| {
        let cl = co_ann_algebra(l)?;
        let map = ca
            .members
            .iter()
            .map(|f| {
                let img = Filter::trusted(r.image(f.members()));
                cl.index_of(&img)
                    .ok_or_else(|| Error::Invariant(format!("λ({}) is not a co-annihilator", a.format_set(f.members()))))
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Morphism::new(Kind::BoundedLattice, map);
        check_isomorphism(ca.lattice(), cl.lattice(), &m)?;
        Ok(m)
    });
    rep.check("(e) μ: Co-Ann(A) → Co-Ann(L(A)) is an isomorphism", mu.err().map(|e| e.to_string()));

    let (name, failure) = commutes_with_top(r);
    rep.check(name, failure);
    Ok(rep)
}

/// `λ(X^⊤) = λ(X)^⊤`: over every subset when the carrier is small enough,
/// otherwise over singletons, pairs, and the co-annihilators themselves.
fn commutes_with_top(r: &Reticulation) -> (String, Option<String>) {
    let a = r.source();
    let l = r.lattice();
    let n = a.size();
    let check = |xs: &[Elem]| {
        let lhs = r.image(co_annihilator(a, xs.iter().copied()).members());
        let rhs = co_annihilator(l, xs.iter().map(|&x| r.lambda_of(x)));
        (lhs != *rhs.as_set()).then(|| format!("X = {}", a.format_set(xs.iter().copied())))
    };
    if n <= SUBSET_LIMIT && l.size() <= 64 {
        let sa = singleton_masks(a);
        let sl = singleton_masks(l);
        let lam: Vec<Elem> = r.lambda().to_vec();
        let image = |m: u64| (0..n).filter(|i| m >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << lam[i]);
        let (all_a, all_l) = (mask_all(n), mask_all(l.size()));
        let bad = par::find_first(1usize << n, |x| {
            let ann = (0..n).filter(|i| x >> i & 1 == 1).fold(all_a, |acc, i| acc & sa[i]);
            let img = image(x as u64);
            let ann_l = (0..l.size()).filter(|j| img >> j & 1 == 1).fold(all_l, |acc, j| acc & sl[j]);
            (image(ann) != ann_l).then_some(x)
        });
        let failure = bad.and_then(|x| check(&(0..n).filter(|i| x >> i & 1 == 1).collect::<Vec<_>>()));
        (format!("(f) λ(X^⊤) = λ(X)^⊤ for all {} subsets", 1usize << n), failure)
    } else {
        let mut sets: Vec<Vec<Elem>> = (0..n).flat_map(|x| (x..n).map(move |y| vec![x, y])).collect();
        if let Ok(ca) = co_ann_algebra(a) {
            sets.extend(ca.members.iter().map(|f| f.to_vec()));
        }
        let failure = sets.iter().find_map(|xs| check(xs));
        (
            format!("(f) λ(X^⊤) = λ(X)^⊤ for {} sampled subsets (carrier too large to enumerate)", sets.len()),
            failure,
        )
    }
}

fn mask_all(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `~a v ~~a = 1` for every `a`; the counterexample is `(a, ~a v ~~a)`.
pub fn negation_identity(a: &FiniteResiduatedLattice) -> Verdict<(Elem, Elem)> {
    Verdict::from(a.elements().find_map(|x| {
        let v = a.join(a.negate(x), a.negate(a.negate(x)));
        (v != a.top()).then_some((x, v))
    }))
}

/// `l* v l** = 1` for every `l` of a pseudocomplemented lattice.
pub fn pc_identity(l: &FiniteBoundedLattice) -> Result<Verdict<(Elem, Elem)>> {
    let star = |x: Elem| pseudocomplement(l, x).ok_or(Error::NotPseudocomplemented { element: x });
    for x in l.elements() {
        let s = star(x)?;
        let v = l.join(s, star(s)?);
        if v != l.top() {
            return Ok(Verdict::from(Some((x, v))));
        }
    }
    Ok(Verdict::from(None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::reticulation::reticulate;

    fn names<A: FiniteAlgebra>(a: &A, f: &Filter) -> String {
        a.format_set(f.members())
    }

    #[test]
    fn co_annihilators_of_the_fixtures() {
        let i12 = fixtures::iorgulescu12();
        let e = |s| i12.element(s).unwrap();
        assert_eq!(names(&i12, &co_annihilator(&i12, [e("c")])), "{d,1}");
        assert_eq!(names(&i12, &co_annihilator(&i12, [e("d")])), "{c,1}");
        assert_eq!(co_annihilator(&i12, [i12.top()]).len(), 12);
        let i5 = fixtures::iorgulescu5();
        for x in ["0", "a", "b", "c"] {
            assert_eq!(names(&i5, &co_annihilator(&i5, [i5.element(x).unwrap()])), "{1}");
        }
        assert_eq!(co_annihilator(&i5, []).len(), 5);
    }

    #[test]
    fn co_annihilators_are_filters_and_intersections() {
        for (_, a) in fixtures::library() {
            let n = a.size();
            for x in 1u32..(1 << n.min(10)) {
                let xs: Vec<Elem> = (0..n).filter(|i| x >> i & 1 == 1).collect();
                let f = co_annihilator(&a, xs.iter().copied());
                assert!(crate::filters::is_filter(&a, f.as_set()));
                let meet = xs
                    .iter()
                    .map(|&x| co_annihilator(&a, [x]))
                    .reduce(|f, g| f.intersection(&g))
                    .unwrap();
                assert_eq!(f, meet);
            }
        }
    }

    #[test]
    fn co_ann_algebras() {
        let i5 = fixtures::iorgulescu5();
        let ca = co_ann_algebra(&i5).unwrap();
        let got: Vec<String> = ca.members().iter().map(|f| names(&i5, f)).collect();
        assert_eq!(got, ["{1}", "{0,a,b,c,1}"]);
        let one = fixtures::godel_chain(1);
        assert_eq!(co_ann_algebra(&one).unwrap().len(), 1);
        for (_, a) in fixtures::library() {
            let ca = co_ann_algebra(&a).unwrap();
            assert_eq!(ca.members(), &co_ann_by_subsets(&a).unwrap()[..]);
            let rep = ca.check_boolean(&a);
            assert!(rep.passed(), "{rep}");
        }
        let i12 = fixtures::iorgulescu12();
        let got: Vec<String> = co_ann_algebra(&i12).unwrap().members().iter().map(|f| names(&i12, f)).collect();
        assert_eq!(got, ["{1}", "{c,1}", "{d,1}", "{0,n,a,b,i,f,g,h,j,c,d,1}"]);
    }

    #[test]
    fn stone_verdicts() {
        let i5 = fixtures::iorgulescu5();
        assert!(is_stone(&i5).holds());
        assert!(is_strongly_stone(&i5).unwrap().holds());
        let i12 = fixtures::iorgulescu12();
        let v = is_stone(&i12);
        assert_eq!(v.counterexample, Some(i12.element("c").unwrap()));
        assert!(!is_strongly_stone(&i12).unwrap().holds());
        for k in 1..=8 {
            let c = fixtures::godel_chain(k);
            assert!(is_strongly_stone(&c).unwrap().holds());
        }
    }

    #[test]
    fn strongly_stone_oracle_agrees() {
        for (_, a) in fixtures::library() {
            assert_eq!(
                is_strongly_stone(&a).unwrap().holds(),
                is_strongly_stone_by_subsets(&a).unwrap().holds()
            );
            // finite: Stone and strongly Stone coincide
            assert_eq!(is_stone(&a).holds(), is_strongly_stone(&a).unwrap().holds());
        }
    }

    #[test]
    fn m_stone() {
        let opts = SearchOptions::default();
        let r5 = m_stone_conditions(&fixtures::iorgulescu5(), &opts).unwrap();
        assert!(r5.all_hold(), "{r5:?}");
        let r12 = m_stone_conditions(&fixtures::iorgulescu12(), &opts).unwrap();
        assert_eq!(r12.values(), [false; 6]);
        assert!(m_stone_conditions(&fixtures::godel_chain(1), &opts).unwrap().all_hold());
        for (name, a) in fixtures::library() {
            let r = m_stone_conditions(&a, &opts).unwrap();
            assert!(r.agreement(), "{name}: {r:?}");
        }
    }

    #[test]
    fn transfer() {
        let opts = SearchOptions::default();
        for (name, a) in fixtures::library() {
            let r = reticulate(&a).unwrap();
            let rep = transfer_checks(&r, &opts).unwrap();
            assert!(rep.passed(), "{name}: {rep}");
        }
    }

    #[test]
    fn negation_and_pseudocomplement_identities() {
        let i5 = fixtures::iorgulescu5();
        let v = negation_identity(&i5);
        assert_eq!(v.counterexample, Some((i5.element("a").unwrap(), i5.element("c").unwrap())));
        assert!(negation_identity(&fixtures::iorgulescu12()).holds());
        // L(A) is isomorphic to the lattice of A, where a* = b and b* = a,
        // so a* v a** = c and the identity fails at λ(a).
        let r = reticulate(&i5).unwrap();
        let (a, c) = (i5.element("a").unwrap(), i5.element("c").unwrap());
        let v = pc_identity(r.lattice()).unwrap();
        assert_eq!(v.counterexample, Some((r.lambda_of(a), r.lambda_of(c))));
        let b2 = FiniteBoundedLattice::boolean(2).unwrap();
        assert!(pc_identity(&b2).unwrap().holds());
        assert!(pc_identity(&FiniteBoundedLattice::chain(4).unwrap()).unwrap().holds());
    }

    #[test]
    fn lambda_of_the_pseudocomplement() {
        let i5 = fixtures::iorgulescu5();
        let r = reticulate(&i5).unwrap();
        let (a, b) = (i5.element("a").unwrap(), i5.element("b").unwrap());
        assert_eq!(pseudocomplement(r.lattice(), r.lambda_of(a)), Some(r.lambda_of(b)));
        assert_eq!(pseudocomplement(r.lattice(), r.lattice().bot()), Some(r.lattice().top()));
        assert_eq!(pseudocomplement(r.lattice(), r.lattice().top()), Some(r.lattice().bot()));
    }
}
