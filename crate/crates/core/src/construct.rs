//! Labelings and vertex sets on `G × H` assembled from factor data. Every
//! output is re-verified on the product before it is returned.

use crate::classify::{
    iii_k2_witness, iv_holds, triangle_centered, universal_vertices, CaseWitness, Side, SmallCase,
};
use crate::error::{Result, TrdError};
use crate::graph::{bit, bits, mask_from_vertices, Graph, Mask};
use crate::labeling::{
    is_efficient_open_dominating, is_total_dominating, is_total_roman_dominating, LabelFunction,
    SetRole, VertexSet,
};
use crate::product::{direct_product, ProductGraph};

fn require_trdf(g: &Graph, f: &LabelFunction, which: &str) -> Result<()> {
    if !is_total_roman_dominating(g, f)? {
        return Err(TrdError::Precondition(format!(
            "{which} labeling {f:?} is not a TRDF"
        )));
    }
    Ok(())
}

fn certify(pg: &ProductGraph, ones: Mask, twos: Mask, what: &str) -> Result<LabelFunction> {
    let f = LabelFunction::from_masks(pg.graph().order(), ones, twos);
    if !is_total_roman_dominating(pg.graph(), &f)? {
        return Err(TrdError::Internal(format!(
            "{what} produced an invalid labeling {f:?}"
        )));
    }
    Ok(f)
}

/// Label 2 on `(A2 × (B1 ∪ B2)) ∪ (A1 × B2)`, 1 on `A1 × B1`, 0 elsewhere.
/// The weight is `ω(g)ω(h) − 2|A2||B2|`.
pub fn product_trdf_from_factors(
    gg: &Graph,
    hg: &Graph,
    g: &LabelFunction,
    h: &LabelFunction,
) -> Result<LabelFunction> {
    require_trdf(gg, g, "G")?;
    require_trdf(hg, h, "H")?;
    let pg = direct_product(gg, hg)?;
    let (a1, a2, b1, b2) = (g.v1(), g.v2(), h.v1(), h.v2());
    let twos = pg.rectangle(a2, b1 | b2) | pg.rectangle(a1, b2);
    let ones = pg.rectangle(a1, b1);
    let f = certify(&pg, ones, twos, "factor product")?;
    let want = g.weight() * h.weight() - 2 * (a2.count_ones() * b2.count_ones());
    if f.weight() != want {
        return Err(TrdError::Internal(format!(
            "factor product weight {} differs from {want}",
            f.weight()
        )));
    }
    Ok(f)
}

/// Label 2 on `D_G × D_H`, 0 elsewhere; weight `2|D_G||D_H|`.
pub fn product_trdf_from_total_dom_sets(
    gg: &Graph,
    hg: &Graph,
    dg: &VertexSet,
    dh: &VertexSet,
) -> Result<LabelFunction> {
    for (g, d, which) in [(gg, dg, "G"), (hg, dh, "H")] {
        if !is_total_dominating(g, d.members())? {
            return Err(TrdError::Precondition(format!(
                "{which} set {:?} is not total dominating",
                d.vertices()
            )));
        }
    }
    let pg = direct_product(gg, hg)?;
    certify(
        &pg,
        0,
        pg.rectangle(dg.members(), dh.members()),
        "total dominating product",
    )
}

/// `S_G × S_H` for efficient open dominating sets of the factors.
pub fn product_eod_set(
    gg: &Graph,
    hg: &Graph,
    sg: &VertexSet,
    sh: &VertexSet,
) -> Result<VertexSet> {
    for (g, s, which) in [(gg, sg, "G"), (hg, sh, "H")] {
        if !is_efficient_open_dominating(g, s.members())? {
            return Err(TrdError::Precondition(format!(
                "{which} set {:?} is not efficient open dominating",
                s.vertices()
            )));
        }
    }
    let pg = direct_product(gg, hg)?;
    let s = pg.rectangle(sg.members(), sh.members());
    VertexSet::new(pg.graph(), s, SetRole::EfficientOpenDominating).map_err(|_| {
        TrdError::Internal("product of EOD sets is not efficient open dominating".into())
    })
}

fn hyp(case: SmallCase, msg: impl std::fmt::Display) -> TrdError {
    TrdError::Precondition(format!("{}: {msg}", case.as_str()))
}

fn check_vertex(case: SmallCase, g: &Graph, v: usize, which: &str) -> Result<()> {
    if v >= g.order() {
        return Err(hyp(case, format!("vertex {v} is not in {which}")));
    }
    Ok(())
}

fn check_universal(case: SmallCase, g: &Graph, v: usize, which: &str) -> Result<()> {
    check_vertex(case, g, v, which)?;
    if universal_vertices(g).members() & bit(v) == 0 {
        return Err(hyp(case, format!("vertex {v} is not universal in {which}")));
    }
    Ok(())
}

fn check_neighbor(case: SmallCase, g: &Graph, v: usize, w: usize, which: &str) -> Result<()> {
    check_vertex(case, g, w, which)?;
    if !g.has_edge(v, w) {
        return Err(hyp(
            case,
            format!("{w} is not a neighbour of {v} in {which}"),
        ));
    }
    Ok(())
}

fn check_central(case: SmallCase, g: &Graph, t: [usize; 3], which: &str) -> Result<()> {
    for v in t {
        check_vertex(case, g, v, which)?;
    }
    let m = mask_from_vertices(&t);
    let is_triangle = m.count_ones() == 3 && bits(m).all(|v| (g.adj(v) & m).count_ones() == 2);
    if !is_triangle {
        return Err(hyp(case, format!("{t:?} is not a triangle of {which}")));
    }
    if let Some(v) = (0..g.order()).find(|&v| (g.adj(v) & m).count_ones() < 2) {
        return Err(hyp(
            case,
            format!("vertex {v} of {which} has fewer than two neighbours in {t:?}"),
        ));
    }
    Ok(())
}

/// The explicit weight-4, 6 or 7 labelings of `G × H` for the small-value
/// clauses, built from the given witness vertices.
pub fn small_value_construction(
    case: SmallCase,
    gg: &Graph,
    hg: &Graph,
    witness: &CaseWitness,
) -> Result<LabelFunction> {
    gg.require_no_isolated()?;
    hg.require_no_isolated()?;
    let pg = direct_product(gg, hg)?;
    let at = |g: usize, h: usize| bit(pg.id(g, h));
    let (ones, twos) = match (case, witness) {
        (SmallCase::Ii, CaseWitness::BothK2) => {
            if !gg.is_k2() || !hg.is_k2() {
                return Err(hyp(case, "both factors must be K2"));
            }
            (pg.graph().vertex_mask(), 0)
        }
        (
            SmallCase::IiiUniversal,
            CaseWitness::TwoUniversal {
                g: [g, g1],
                h: [h, h1],
            },
        ) => {
            for (f, v, which) in [(gg, *g, "G"), (gg, *g1, "G"), (hg, *h, "H"), (hg, *h1, "H")] {
                check_universal(case, f, v, which)?;
            }
            if g == g1 || h == h1 {
                return Err(hyp(case, "the two universal vertices must differ"));
            }
            if gg.order().max(hg.order()) < 3 {
                return Err(hyp(case, "one factor must have order at least three"));
            }
            (at(*g, *h1) | at(*g1, *h), at(*g, *h) | at(*g1, *h1))
        }
        (
            SmallCase::IiiK2,
            CaseWitness::K2Factor {
                k2,
                universal: u,
                neighbor: u1,
            },
        ) => {
            let (k, other, which) = match k2 {
                Side::G => (gg, hg, "H"),
                Side::H => (hg, gg, "G"),
            };
            if !k.is_k2() {
                return Err(hyp(case, "the named factor is not K2"));
            }
            if other.order() < 3 {
                return Err(hyp(case, format!("{which} must have order at least three")));
            }
            check_universal(case, other, *u, which)?;
            check_neighbor(case, other, *u, *u1, which)?;
            // V2 = {u} × V(K2), V1 = {u'} × V(K2)
            let row = |x: usize| match k2 {
                Side::G => at(0, x) | at(1, x),
                Side::H => at(x, 0) | at(x, 1),
            };
            (row(*u1), row(*u))
        }
        (SmallCase::IiiTriangle, CaseWitness::Triangles { g, h }) => {
            check_central(case, gg, *g, "G")?;
            check_central(case, hg, *h, "H")?;
            (0, (0..3).fold(0, |m, i| m | at(g[i], h[i])))
        }
        (
            SmallCase::Iv,
            CaseWitness::OneUniversal {
                g,
                g_neighbor: g1,
                h,
                h_neighbor: h1,
            },
        ) => {
            if !iv_holds(gg, hg) {
                return Err(hyp(
                    case,
                    "need a universal vertex in both factors, exactly one in one of them, \
                     the other not K2, and not both triangle centered",
                ));
            }
            check_universal(case, gg, *g, "G")?;
            check_universal(case, hg, *h, "H")?;
            check_neighbor(case, gg, *g, *g1, "G")?;
            check_neighbor(case, hg, *h, *h1, "H")?;
            (at(*g1, *h1), at(*g, *h) | at(*g, *h1) | at(*g1, *h))
        }
        (SmallCase::V, _) => {
            return Err(hyp(
                case,
                "no explicit construction; use total dominating sets",
            ))
        }
        _ => return Err(hyp(case, "witness does not match the case")),
    };
    let f = certify(&pg, ones, twos, case.as_str())?;
    if f.weight() != case.value() {
        return Err(TrdError::Internal(format!(
            "{} construction has weight {}",
            case.as_str(),
            f.weight()
        )));
    }
    Ok(f)
}

/// Lexicographically least witness for `case`, if its hypotheses hold.
pub fn least_case_witness(case: SmallCase, gg: &Graph, hg: &Graph) -> Option<CaseWitness> {
    let first_nb = |g: &Graph, v: usize| g.adj(v).trailing_zeros() as usize;
    let least_universal = |g: &Graph| bits(universal_vertices(g).members()).next();
    let two_universal = |g: &Graph| {
        let mut it = bits(universal_vertices(g).members());
        Some([it.next()?, it.next()?])
    };
    match case {
        SmallCase::Ii => (gg.is_k2() && hg.is_k2()).then_some(CaseWitness::BothK2),
        SmallCase::IiiUniversal => Some(CaseWitness::TwoUniversal {
            g: two_universal(gg)?,
            h: two_universal(hg)?,
        }),
        SmallCase::IiiK2 => iii_k2_witness(gg, hg),
        SmallCase::IiiTriangle => Some(CaseWitness::Triangles {
            g: triangle_centered(gg)?.triangle,
            h: triangle_centered(hg)?.triangle,
        }),
        SmallCase::Iv => {
            let (g, h) = (least_universal(gg)?, least_universal(hg)?);
            Some(CaseWitness::OneUniversal {
                g,
                g_neighbor: first_nb(gg, g),
                h,
                h_neighbor: first_nb(hg, h),
            })
        }
        SmallCase::V => None,
    }
}

/// [`small_value_construction`] with the lexicographically least witness.
pub fn small_value_construction_auto(
    case: SmallCase,
    gg: &Graph,
    hg: &Graph,
) -> Result<LabelFunction> {
    let w = least_case_witness(case, gg, hg)
        .ok_or_else(|| hyp(case, "hypotheses do not hold for these factors"))?;
    small_value_construction(case, gg, hg, &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec::{self, *};
    use crate::solve::{gamma_t_exact, gamma_tr_exact, Budget};

    fn fam(f: FamilySpec) -> Graph {
        f.generate().unwrap()
    }

    fn lf(v: &[u8]) -> LabelFunction {
        LabelFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn factor_products() {
        let p3 = fam(Path(3));
        assert_eq!(
            product_trdf_from_factors(&p3, &p3, &lf(&[0, 2, 1]), &lf(&[0, 2, 1]))
                .unwrap()
                .weight(),
            7
        );
        let k2 = fam(Complete(2));
        assert_eq!(
            product_trdf_from_factors(&k2, &k2, &lf(&[1, 1]), &lf(&[1, 1]))
                .unwrap()
                .weight(),
            4
        );
        let p4 = fam(Path(4));
        let f = lf(&[0, 2, 2, 0]);
        assert_eq!(
            product_trdf_from_factors(&p4, &p4, &f, &f)
                .unwrap()
                .weight(),
            8
        );
        assert!(matches!(
            product_trdf_from_factors(&p4, &p4, &lf(&[0, 2, 0, 0]), &f),
            Err(TrdError::Precondition(_))
        ));
    }

    #[test]
    fn total_dom_products() {
        let pairs = [
            (fam(Cycle(4)), fam(Cycle(4)), 8),
            (fam(Complete(2)), fam(Path(3)), 8),
            (
                fam(CompleteBipartite(2, 2)),
                fam(CompleteBipartite(2, 2)),
                8,
            ),
        ];
        for (g, h, w) in pairs {
            let dg = *gamma_t_exact(&g).unwrap().set().unwrap();
            let dh = *gamma_t_exact(&h).unwrap().set().unwrap();
            assert_eq!(
                product_trdf_from_total_dom_sets(&g, &h, &dg, &dh)
                    .unwrap()
                    .weight(),
                w
            );
        }
        let k2p3 = direct_product(&fam(Complete(2)), &fam(Path(3))).unwrap();
        assert_eq!(
            gamma_tr_exact(k2p3.graph(), Budget::UNLIMITED)
                .unwrap()
                .value,
            6
        );
    }

    #[test]
    fn eod_products() {
        let eod = |g: &Graph| crate::solve::eod_set(g).unwrap().unwrap();
        let (c4, c8, k2) = (fam(Cycle(4)), fam(Cycle(8)), fam(Complete(2)));
        assert_eq!(
            product_eod_set(&c4, &c4, &eod(&c4), &eod(&c4))
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            product_eod_set(&c4, &c8, &eod(&c4), &eod(&c8))
                .unwrap()
                .len(),
            8
        );
        assert_eq!(
            product_eod_set(&k2, &k2, &eod(&k2), &eod(&k2))
                .unwrap()
                .len(),
            4
        );
        let bad = VertexSet::plain(0b101);
        assert!(matches!(
            product_eod_set(&c4, &c4, &bad, &eod(&c4)),
            Err(TrdError::Precondition(_))
        ));
    }

    #[test]
    fn small_cases() {
        let (k2, k3, k4) = (fam(Complete(2)), fam(Complete(3)), fam(Complete(4)));
        let (s2, s3) = (fam(Star(2)), fam(Star(3)));
        let auto =
            |c, g: &Graph, h: &Graph| small_value_construction_auto(c, g, h).map(|f| f.weight());
        assert_eq!(auto(SmallCase::Ii, &k2, &k2).unwrap(), 4);
        assert_eq!(auto(SmallCase::IiiTriangle, &k3, &k3).unwrap(), 6);
        assert_eq!(auto(SmallCase::IiiUniversal, &k3, &k4).unwrap(), 6);
        assert_eq!(auto(SmallCase::IiiUniversal, &k2, &k3).unwrap(), 6);
        assert_eq!(auto(SmallCase::IiiK2, &k2, &s2).unwrap(), 6);
        assert_eq!(auto(SmallCase::IiiK2, &s3, &k2).unwrap(), 6);
        assert_eq!(auto(SmallCase::Iv, &s2, &s3).unwrap(), 7);
        let k7m = fam(CompleteMinusMatching(7));
        assert_eq!(auto(SmallCase::IiiTriangle, &k7m, &k7m).unwrap(), 6);
    }

    #[test]
    fn small_case_hypotheses() {
        let (k2, c4, s2) = (fam(Complete(2)), fam(Cycle(4)), fam(Star(2)));
        let err = small_value_construction_auto(SmallCase::IiiUniversal, &k2, &k2).unwrap_err();
        assert!(err.to_string().contains("iii_universal"));
        let w = CaseWitness::OneUniversal {
            g: 0,
            g_neighbor: 1,
            h: 1,
            h_neighbor: 0,
        };
        let err = small_value_construction(SmallCase::Iv, &s2, &s2, &w).unwrap_err();
        assert!(err.to_string().contains("not universal in H"), "{err}");
        let w = CaseWitness::Triangles {
            g: [0, 1, 2],
            h: [0, 1, 2],
        };
        assert!(small_value_construction(SmallCase::IiiTriangle, &c4, &c4, &w).is_err());
        assert!(small_value_construction(SmallCase::Ii, &k2, &k2, &w).is_err());
    }
}
