//! Parametric graph families.
//!
//! Vertex numbering per family:
//! - paths and cycles run `0-1-...-(n-1)`;
//! - `K_{p,q}` puts the `p`-side on `0..p`, stars `K_{1,s}` have centre 0;
//! - wheels and fans have the hub at 0 and the rim/path on `1..n`;
//! - `K_n - M` removes the matching `{0,1}, {2,3}, ...`, so for odd `n`
//!   vertex `n-1` stays universal;
//! - the prism over `G` places copy `c ∈ {0,1}` of vertex `v` at `2v + c`;
//! - the join of `G` and `H` puts `G` first.

use crate::error::{Result, TrdError};
use crate::graph::{Graph, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    Fan(usize),
    CompleteMinusMatching(usize),
    Prism(Box<Graph>),
    Join(Box<Graph>, Box<Graph>),
}

fn range_err(msg: impl Into<String>) -> TrdError {
    TrdError::Input(msg.into())
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(TrdError::Size {
            what: "family generator",
            order: n,
            limit: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        use FamilySpec::*;
        let (g, name) = match self {
            Path(n) => {
                if *n < 1 {
                    return Err(range_err("path P_n needs n >= 1"));
                }
                check_order(*n)?;
                let edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
                (Graph::from_edge_list(*n, &edges)?, format!("P{n}"))
            }
            Cycle(n) => {
                if *n < 3 {
                    return Err(range_err("cycle C_n needs n >= 3"));
                }
                check_order(*n)?;
                let edges: Vec<_> = (0..*n).map(|v| (v, (v + 1) % n)).collect();
                (Graph::from_edge_list(*n, &edges)?, format!("C{n}"))
            }
            Complete(n) => {
                if *n < 1 {
                    return Err(range_err("complete graph K_n needs n >= 1"));
                }
                check_order(*n)?;
                (complete(*n)?, format!("K{n}"))
            }
            CompleteBipartite(p, q) => {
                if *p < 1 || *q < 1 {
                    return Err(range_err("complete bipartite K_{p,q} needs p, q >= 1"));
                }
                check_order(p + q)?;
                let edges: Vec<_> = (0..*p)
                    .flat_map(|a| (*p..p + q).map(move |b| (a, b)))
                    .collect();
                (Graph::from_edge_list(p + q, &edges)?, format!("K{p},{q}"))
            }
            Star(s) => {
                if *s < 1 {
                    return Err(range_err("star K_{1,s} needs s >= 1"));
                }
                return Ok(CompleteBipartite(1, *s)
                    .generate()?
                    .with_name(format!("K1,{s}")));
            }
            Wheel(n) => {
                if *n < 4 {
                    return Err(range_err("wheel W_n needs n >= 4"));
                }
                check_order(*n)?;
                let rim = n - 1;
                let mut edges: Vec<_> = (1..*n).map(|v| (0, v)).collect();
                edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
                (Graph::from_edge_list(*n, &edges)?, format!("W{n}"))
            }
            Fan(n) => {
                if *n < 2 {
                    return Err(range_err("fan F_n needs n >= 2"));
                }
                check_order(*n)?;
                let mut edges: Vec<_> = (1..*n).map(|v| (0, v)).collect();
                edges.extend((2..*n).map(|v| (v - 1, v)));
                (Graph::from_edge_list(*n, &edges)?, format!("F{n}"))
            }
            CompleteMinusMatching(n) => {
                if *n < 2 {
                    return Err(range_err("K_n - M needs n >= 2"));
                }
                check_order(*n)?;
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        let matched = u % 2 == 0 && v == u + 1;
                        if !matched {
                            edges.push((u, v));
                        }
                    }
                }
                (Graph::from_edge_list(*n, &edges)?, format!("K{n}-M"))
            }
            Prism(base) => {
                let n = base.order();
                if n < 1 {
                    return Err(range_err("prism needs a non-empty base graph"));
                }
                check_order(2 * n)?;
                let mut edges = Vec::new();
                for (u, v) in base.edges() {
                    edges.push((2 * u, 2 * v));
                    edges.push((2 * u + 1, 2 * v + 1));
                }
                edges.extend((0..n).map(|v| (2 * v, 2 * v + 1)));
                (
                    Graph::from_edge_list(2 * n, &edges)?,
                    format!("prism{}", base.label()),
                )
            }
            Join(a, b) => {
                let (an, bn) = (a.order(), b.order());
                check_order(an + bn)?;
                let mut edges = a.edges();
                edges.extend(b.edges().into_iter().map(|(u, v)| (an + u, an + v)));
                for u in 0..an {
                    edges.extend((0..bn).map(|v| (u, an + v)));
                }
                (
                    Graph::from_edge_list(an + bn, &edges)?,
                    format!("join({},{})", a.label(), b.label()),
                )
            }
        };
        Ok(g.with_name(name))
    }
}

impl FamilySpec {
    /// Parses shorthand such as `K3`, `C4`, `P4`, `K2,3`, `W5`, `F6`,
    /// `K5-M` or `prismC3`. Returns `None` when `text` is not shorthand.
    pub fn parse_shorthand(text: &str) -> Option<Result<FamilySpec>> {
        use FamilySpec::*;
        let num = |t: &str| -> Option<usize> {
            (!t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()))
                .then(|| t.parse().ok())
                .flatten()
        };
        if let Some(rest) = text.strip_prefix("prism") {
            return Some(FamilySpec::parse_shorthand(rest)?.and_then(|base| {
                let g = base.generate()?;
                Ok(Prism(Box::new(g)))
            }));
        }
        let (head, tail) = text.split_at(text.chars().next()?.len_utf8());
        let spec = match head {
            "K" => {
                if let Some(n) = tail.strip_suffix("-M").and_then(num) {
                    CompleteMinusMatching(n)
                } else if let Some((p, q)) = tail.split_once(',') {
                    match (num(p)?, num(q)?) {
                        (1, s) => Star(s),
                        (p, q) => CompleteBipartite(p, q),
                    }
                } else {
                    Complete(num(tail)?)
                }
            }
            "C" => Cycle(num(tail)?),
            "P" => Path(num(tail)?),
            "W" => Wheel(num(tail)?),
            "F" => Fan(num(tail)?),
            _ => return None,
        };
        Some(Ok(spec))
    }
}

fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use FamilySpec::*;

    fn universal_count(g: &Graph) -> usize {
        (0..g.order())
            .filter(|&v| g.degree(v) == g.order() - 1)
            .count()
    }

    #[test]
    fn closed_form_counts() {
        for n in 2..12 {
            let p = Path(n).generate().unwrap();
            assert_eq!((p.order(), p.edge_count()), (n, n - 1));
            let k = Complete(n).generate().unwrap();
            assert_eq!(k.edge_count(), n * (n - 1) / 2);
            let f = Fan(n).generate().unwrap();
            assert_eq!(f.edge_count(), 2 * n - 3);
        }
        for n in 3..12 {
            assert_eq!(Cycle(n).generate().unwrap().edge_count(), n);
        }
        for n in 4..12 {
            let w = Wheel(n).generate().unwrap();
            assert_eq!(w.edge_count(), 2 * (n - 1));
        }
        for base in [Cycle(5).generate().unwrap(), Path(4).generate().unwrap()] {
            let pr = Prism(Box::new(base.clone())).generate().unwrap();
            assert_eq!(pr.order(), 2 * base.order());
            assert_eq!(pr.edge_count(), 2 * base.edge_count() + base.order());
        }
    }

    #[test]
    fn wheel_w5() {
        let w = Wheel(5).generate().unwrap();
        assert_eq!((w.order(), w.edge_count()), (5, 8));
        assert_eq!(universal_count(&w), 1);
        assert_eq!(w.degree(0), 4);
        // W4 = K4, all universal.
        assert_eq!(universal_count(&Wheel(4).generate().unwrap()), 4);
    }

    #[test]
    fn k5_minus_matching() {
        let g = CompleteMinusMatching(5).generate().unwrap();
        assert_eq!((g.order(), g.edge_count()), (5, 8));
        assert_eq!(universal_count(&g), 1);
        assert_eq!(g.degree(4), 4);
    }

    #[test]
    fn prism_over_triangle() {
        let g = Prism(Box::new(Complete(3).generate().unwrap()))
            .generate()
            .unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 9));
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn join_of_k1_and_c4_is_w5() {
        let j = Join(
            Box::new(Complete(1).generate().unwrap()),
            Box::new(Cycle(4).generate().unwrap()),
        )
        .generate()
        .unwrap();
        assert_eq!(j, Wheel(5).generate().unwrap());
    }

    #[test]
    fn structural_predicates() {
        let c5 = Cycle(5).generate().unwrap();
        assert!(c5.is_triangle_free());
        assert!(!c5.is_bipartite());
        let k23 = CompleteBipartite(2, 3).generate().unwrap();
        assert!(k23.is_bipartite());
        assert!(!k23.is_regular());
        assert!(k23.is_connected());
    }

    #[test]
    fn shorthand() {
        let parse = |t: &str| FamilySpec::parse_shorthand(t).map(|r| r.unwrap());
        assert_eq!(parse("K3"), Some(Complete(3)));
        assert_eq!(parse("K2,3"), Some(CompleteBipartite(2, 3)));
        assert_eq!(parse("K1,3"), Some(Star(3)));
        assert_eq!(parse("K5-M"), Some(CompleteMinusMatching(5)));
        assert_eq!(parse("W5"), Some(Wheel(5)));
        assert_eq!(parse("F6"), Some(Fan(6)));
        let prism = parse("prismC3").unwrap().generate().unwrap();
        assert_eq!((prism.order(), prism.edge_count()), (6, 9));
        assert_eq!(parse("Bw"), None);
        assert_eq!(parse("Kx"), None);
        assert_eq!(parse(""), None);
    }

    #[test]
    fn parameter_ranges() {
        assert!(matches!(Wheel(3).generate(), Err(TrdError::Input(_))));
        assert!(matches!(Cycle(2).generate(), Err(TrdError::Input(_))));
        assert!(matches!(Fan(1).generate(), Err(TrdError::Input(_))));
        assert!(matches!(
            CompleteBipartite(0, 3).generate(),
            Err(TrdError::Input(_))
        ));
        assert!(matches!(
            CompleteMinusMatching(1).generate(),
            Err(TrdError::Input(_))
        ));
        assert!(matches!(
            Complete(65).generate(),
            Err(TrdError::Size { .. })
        ));
    }
}
