//! Documented facts about the built-in algebras, checked end to end. This is
//! what `reticulation check-paper` runs.

use crate::algebra::{boolean_center, check_arithmetic, Elem, FiniteAlgebra, FiniteResiduatedLattice};
use crate::error::Result;
use crate::filters::{all_filters, principal_filter, quotient_rl};
use crate::fixtures;
use crate::morphism::SearchOptions;
use crate::report::Report;
use crate::reticulation::{quotient_comparison, reticulate, transport_filters};
use crate::stone::{co_annihilator, is_stone, is_strongly_stone, m_stone_conditions, negation_identity, transfer_checks};

fn set<A: FiniteAlgebra>(a: &A, xs: impl IntoIterator<Item = Elem>) -> String {
    a.format_set(xs)
}

fn expect(r: &mut Report, name: &str, got: impl ToString, want: &str) {
    let got = got.to_string();
    r.check(name, (got != want).then(|| format!("got {got}, expected {want}")));
}

fn kowalski6(r: &mut Report, opts: &SearchOptions) -> Result<()> {
    let k = fixtures::kowalski6();
    let e = |s: &str| k.element(s).expect("fixture name");
    expect(r, "kowalski6: d <= c", k.leq(e("d"), e("c")), "true");
    expect(r, "kowalski6: b <= d", k.leq(e("b"), e("d")), "false");
    expect(r, "kowalski6: ~c", k.name(k.negate(e("c"))), "b");
    expect(r, "kowalski6: <b>", set(&k, principal_filter(&k, e("b")).members()), "{a,b,1}");
    expect(r, "kowalski6: <c>", set(&k, principal_filter(&k, e("c")).members()), "{a,c,d,1}");
    expect(r, "kowalski6: <d>", set(&k, principal_filter(&k, e("d")).members()), "{a,c,d,1}");
    let ret = reticulate(&k)?;
    expect(r, "kowalski6: L(A)", set(ret.lattice(), ret.lattice().elements()), "{<0>,<a>,<b>,<c>,<1>}");
    let f = principal_filter(&k, e("a"));
    expect(r, "kowalski6: F = <a>", set(&k, f.members()), "{a,1}");
    let (q, proj) = quotient_rl(&k, &f)?;
    expect(r, "kowalski6: A/F", set(&q, q.elements()), "{0/F,1/F,b/F,c/F}");
    let c_class: Vec<Elem> = k.elements().filter(|&x| proj.apply(x) == proj.apply(e("c"))).collect();
    expect(r, "kowalski6: c/F", set(&k, c_class), "{c,d}");
    let cmp = quotient_comparison(&ret, &f, opts)?;
    expect(r, "kowalski6: |L(A/F)|", cmp.retic_of_quotient.lattice().size(), "4");
    expect(r, "kowalski6: |L(A)/λ(F)|", cmp.quotient_of_retic.size(), "4");
    expect(r, "kowalski6: L(A/F) ≅ L(A)/λ(F)", cmp.isomorphic(), "true");
    expect(
        r,
        "kowalski6: h is surjective",
        cmp.surjection.is_surjective(cmp.retic_of_quotient.lattice().size()),
        "true",
    );
    expect(r, "kowalski6: filters", all_filters(&k)?.len(), "5");
    Ok(())
}

fn stone_facts(r: &mut Report, label: &str, a: &FiniteResiduatedLattice) {
    let b = boolean_center(a);
    expect(r, &format!("{label}: B(A)"), set(a, b.elements().iter().copied()), "{0,1}");
    expect(r, &format!("{label}: <0>"), principal_filter(a, a.bot()).len(), &a.size().to_string());
    expect(r, &format!("{label}: <1>"), set(a, principal_filter(a, a.top()).members()), "{1}");
}

fn iorgulescu5(r: &mut Report, opts: &SearchOptions) -> Result<()> {
    let a = fixtures::iorgulescu5();
    let e = |s: &str| a.element(s).expect("fixture name");
    stone_facts(r, "iorgulescu5", &a);
    for x in ["0", "a", "b", "c"] {
        expect(r, &format!("iorgulescu5: {x}^⊤"), set(&a, co_annihilator(&a, [e(x)]).members()), "{1}");
    }
    expect(r, "iorgulescu5: 1^⊤", co_annihilator(&a, [a.top()]).len(), "5");
    expect(r, "iorgulescu5: Stone", is_stone(&a).holds(), "true");
    expect(r, "iorgulescu5: strongly Stone", is_strongly_stone(&a)?.holds(), "true");
    expect(r, "iorgulescu5: ~a", a.name(a.negate(e("a"))), "b");
    expect(r, "iorgulescu5: ~~a", a.name(a.negate(a.negate(e("a")))), "a");
    let v = negation_identity(&a);
    let shown = v
        .counterexample
        .map(|(x, val)| format!("{} -> {}", a.name(x), a.name(val)))
        .unwrap_or_else(|| "holds".into());
    expect(r, "iorgulescu5: ~a v ~~a = 1", shown, "a -> c");
    expect(r, "iorgulescu5: m-Stone conditions all hold", m_stone_conditions(&a, opts)?.all_hold(), "true");
    let ret = reticulate(&a)?;
    expect(r, "iorgulescu5: λ is a bijection", ret.lattice().size(), "5");
    Ok(())
}

fn iorgulescu12(r: &mut Report, opts: &SearchOptions) -> Result<()> {
    let a = fixtures::iorgulescu12();
    let e = |s: &str| a.element(s).expect("fixture name");
    stone_facts(r, "iorgulescu12", &a);
    expect(r, "iorgulescu12: ~a v ~~a = 1", negation_identity(&a).holds(), "true");
    expect(r, "iorgulescu12: c^⊤", set(&a, co_annihilator(&a, [e("c")]).members()), "{d,1}");
    let shown = is_stone(&a)
        .counterexample
        .map(|x| a.name(x).to_string())
        .unwrap_or_else(|| "Stone".into());
    expect(r, "iorgulescu12: not Stone", shown, "c");
    let m = m_stone_conditions(&a, opts)?;
    expect(r, "iorgulescu12: m-Stone conditions all fail", m.values().iter().any(|&x| x), "false");
    expect(r, "iorgulescu12: arithmetic", check_arithmetic(&a).passed(), "true");
    Ok(())
}

fn chains(r: &mut Report) -> Result<()> {
    for k in 2..=8 {
        let c = fixtures::godel_chain(k);
        let bad = c.elements().find(|&x| {
            let want = if x == c.top() { k } else { 1 };
            co_annihilator(&c, [x]).len() != want
        });
        r.check(
            format!("chain{k}: co-annihilators are {{1}} except 1^⊤"),
            bad.map(|x| format!("at {}", c.name(x))),
        );
        expect(r, &format!("chain{k}: strongly Stone"), is_strongly_stone(&c)?.holds(), "true");
    }
    Ok(())
}

/// Runs every documented fact plus the structural checks (axioms,
/// filter transport, transfer) over the whole fixture library.
pub fn documented_facts(opts: &SearchOptions) -> Result<Report> {
    let mut r = Report::new("documented facts");
    kowalski6(&mut r, opts)?;
    iorgulescu5(&mut r, opts)?;
    iorgulescu12(&mut r, opts)?;
    chains(&mut r)?;
    for (name, a) in fixtures::library() {
        let ret = reticulate(&a)?;
        let axioms = ret.check_axioms();
        r.check(
            format!("{name}: reticulation axioms"),
            axioms.failures().next().map(|c| format!("{}: {}", c.name, c.detail)),
        );
        r.check(
            format!("{name}: F(A) ≅ F(L(A)) via λ"),
            transport_filters(&ret).err().map(|e| e.to_string()),
        );
        let t = transfer_checks(&ret, opts)?;
        r.check(
            format!("{name}: transfer checks"),
            t.failures().next().map(|c| format!("{}: {}", c.name, c.detail)),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let r = documented_facts(&SearchOptions::default()).unwrap();
        assert!(r.passed(), "{r}");
    }
}
