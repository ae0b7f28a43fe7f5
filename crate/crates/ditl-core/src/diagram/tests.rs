use super::*;
use crate::diagram::render::RenderFormat;
use crate::error::DiagramDefect;
use crate::numbers::binomial;
use num::bigint::BigUint;

/// The ten basis diagrams of the three-strand algebra, in the order the
/// calculus lists them: identity, the five undecorated shapes, then the
/// decorated companions.
pub fn three_strand_fixture() -> Vec<Diagram> {
    [
        "k=3 m=3 : B1-T1 B2-T2 B3-T3",
        "k=3 m=3 : B1-B2 T1-T2 B3-T3",
        "k=3 m=3 : B1-T1 B2-B3 T2-T3",
        "k=3 m=3 : B1-B2 T2-T3 B3-T1",
        "k=3 m=3 : B2-B3 T1-T2 B1-T3",
        "k=3 m=3 : B1-B2* T1-T2* B3-T3",
        "k=3 m=3 : B1-B2* T1-T2 B3-T3*",
        "k=3 m=3 : B1-B2 T1-T2* B3-T3*",
        "k=3 m=3 : B1-B2* T2-T3 B3-T1*",
        "k=3 m=3 : B2-B3 T1-T2* B1-T3*",
    ]
    .iter()
    .map(|s| parse_diagram(s).expect("fixture parses"))
    .collect()
}

fn diag(s: &str) -> Diagram {
    parse_diagram(s).unwrap()
}

#[test]
fn exposure_through_strands() {
    let id2 = Diagram::identity(2);
    assert!(id2
        .is_left_exposed((Node::Bottom(1), Node::Top(1)))
        .unwrap());
    assert!(!id2
        .is_left_exposed((Node::Bottom(2), Node::Top(2)))
        .unwrap());
    assert_eq!(
        id2.is_left_exposed((Node::Bottom(1), Node::Top(2))),
        Err(Error::StrandNotInDiagram)
    );
}

#[test]
fn exposure_in_basis_diagram_nine() {
    let d = diag("k=3 m=3 : B1-B2* T2-T3 B3-T1*");
    assert!(d.is_left_exposed((Node::Bottom(1), Node::Bottom(2))).unwrap());
    assert!(!d.is_left_exposed((Node::Top(2), Node::Top(3))).unwrap());
    assert!(d.is_left_exposed((Node::Bottom(3), Node::Top(1))).unwrap());
}

#[test]
fn validate_examples() {
    assert!(Diagram::identity(3).is_valid());
    // a lone dot is odd
    let lone = Diagram::new(
        1,
        1,
        vec![Strand::new(Node::Bottom(1), Node::Top(1), true)],
    );
    assert_eq!(
        lone.unwrap_err(),
        Error::InvalidDiagram(DiagramDefect::OddDecorations)
    );
    // decorated arcs at spot 2 are blocked by the through strand
    let blocked = Diagram::new(
        3,
        3,
        vec![
            Strand::new(Node::Bottom(1), Node::Top(1), false),
            Strand::new(Node::Bottom(2), Node::Bottom(3), true),
            Strand::new(Node::Top(2), Node::Top(3), true),
        ],
    );
    assert_eq!(
        blocked.unwrap_err(),
        Error::InvalidDiagram(DiagramDefect::UnexposedDecoration)
    );
}

#[test]
fn parse_rejects_crossings() {
    match parse_diagram("k=2 m=2 : B1-T2 B2-T1") {
        Err(Error::InvalidDiagram(DiagramDefect::Crossing)) => {}
        other => panic!("expected crossing rejection, got {other:?}"),
    }
}

#[test]
fn enumerate_small_counts() {
    assert_eq!(enumerate_basis(1, 1).len(), 1);
    assert_eq!(enumerate_basis(1, 2).len(), 0); // odd
    assert_eq!(enumerate_basis(3, 3).len(), 10);
    assert_eq!(enumerate_basis(4, 4).len(), 35);
    let decorated = enumerate_basis(3, 3)
        .iter()
        .filter(|d| d.is_decorated())
        .count();
    assert_eq!(decorated, 5);
}

#[test]
fn enumeration_matches_three_strand_fixture() {
    let mut ours = enumerate_basis(3, 3);
    let mut fixture = three_strand_fixture();
    ours.sort();
    fixture.sort();
    assert_eq!(ours, fixture);
}

/// Independent oracle: enumerate every decoration pattern of every matching
/// and keep what `validate` accepts.
fn brute_force_count(k: u8, m: u8) -> u64 {
    let undecorated: Vec<Diagram> = enumerate_basis(k, m)
        .into_iter()
        .filter(|d| !d.is_decorated())
        .collect();
    let mut count = 0u64;
    for d in undecorated {
        let n = d.strands().len();
        for mask in 0u64..(1 << n) {
            let strands = d
                .strands()
                .iter()
                .enumerate()
                .map(|(i, s)| Strand {
                    ends: s.ends,
                    dotted: mask >> i & 1 == 1,
                })
                .collect();
            if Diagram::new(k, m, strands).is_ok() {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn count_identity_and_exposure_formula() {
    for total in (2..=10).step_by(2) {
        for k in 0..=total {
            let m = total - k;
            let ours = enumerate_basis(k, m).len() as u64;
            assert_eq!(ours, brute_force_count(k, m), "k={k} m={m}");
            // sum over matchings of 2^(exposed-1)
            let formula: u64 = enumerate_basis(k, m)
                .iter()
                .filter(|d| !d.is_decorated())
                .map(|d| 1u64 << (d.exposed_flags().iter().filter(|e| **e).count() - 1))
                .sum();
            assert_eq!(ours, formula, "k={k} m={m}");
        }
    }
    for k in 1..=5u8 {
        let expected = binomial(2 * k as u64, k as u64) / BigUint::from(2u32);
        assert_eq!(
            BigUint::from(enumerate_basis(k, k).len()),
            expected,
            "k={k}"
        );
    }
}

#[test]
fn catalan_matching_counts() {
    // undecorated diagrams are exactly the noncrossing matchings
    let catalan = [1u64, 1, 2, 5, 14, 42];
    for half in 1..=4usize {
        let plain = enumerate_basis(half as u8, half as u8)
            .into_iter()
            .filter(|d| !d.is_decorated())
            .count() as u64;
        assert_eq!(plain, catalan[half]);
    }
}

fn e1bar() -> Diagram {
    diag("k=2 m=2 : B1-B2* T1-T2*")
}

fn e1() -> Diagram {
    diag("k=2 m=2 : B1-B2 T1-T2")
}

#[test]
fn compose_decorated_cupcap_squares_to_delta() {
    let r = compose_diagrams(&e1bar(), &e1bar()).unwrap();
    assert_eq!(
        r,
        ScaledDiagram::Scaled {
            delta_exponent: 1,
            diagram: e1bar()
        }
    );
}

#[test]
fn compose_quotient_relation_kills_mixed_loop() {
    assert_eq!(
        compose_diagrams(&e1(), &e1bar()).unwrap(),
        ScaledDiagram::Zero
    );
    assert_eq!(
        compose_diagrams(&e1bar(), &e1()).unwrap(),
        ScaledDiagram::Zero
    );
}

#[test]
fn compose_decorated_word_example() {
    // e1bar . e2 . e1 in the three strand algebra
    let e1_3 = diag("k=3 m=3 : B1-B2 T1-T2 B3-T3");
    let e2_3 = diag("k=3 m=3 : B1-T1 B2-B3 T2-T3");
    let e1bar_3 = diag("k=3 m=3 : B1-B2* T1-T2* B3-T3");
    let step = compose_diagrams(&e2_3, &e1_3).unwrap();
    let ScaledDiagram::Scaled {
        delta_exponent: 0,
        diagram: e2e1,
    } = step
    else {
        panic!("unexpected {step:?}");
    };
    let result = compose_diagrams(&e1bar_3, &e2e1).unwrap();
    assert_eq!(
        result,
        ScaledDiagram::Scaled {
            delta_exponent: 0,
            diagram: diag("k=3 m=3 : B1-B2 T1-T2* B3-T3*"),
        }
    );
}

#[test]
fn juxtapose_examples() {
    let got = e1bar().juxtapose_undecorated_right(&Diagram::identity(1)).unwrap();
    assert_eq!(got, diag("k=3 m=3 : B1-B2* T1-T2* B3-T3"));
    let id3 = Diagram::identity(3);
    assert_eq!(
        Diagram::identity(0).juxtapose_undecorated_right(&id3).unwrap(),
        id3
    );
    let both = e1bar().juxtapose_undecorated_right(&e1()).unwrap();
    assert!(both.is_valid());
    assert_eq!(
        e1().juxtapose_undecorated_right(&e1bar()),
        Err(Error::JuxtaposeDecorated)
    );
}

#[test]
fn flip_examples() {
    let cup = diag("k=2 m=0 : B1-B2");
    assert_eq!(cup.vertical_flip(), diag("k=0 m=2 : T1-T2"));
    assert_eq!(e1bar().vertical_flip(), e1bar());
    let nine = diag("k=3 m=3 : B1-B2* T2-T3 B3-T1*");
    let ten = diag("k=3 m=3 : B2-B3 T1-T2* B1-T3*");
    assert_eq!(nine.vertical_flip(), ten);
}

#[test]
fn flip_is_involutive_antihomomorphism() {
    let basis = enumerate_basis(3, 3);
    for a in &basis {
        assert_eq!(&a.vertical_flip().vertical_flip(), a);
        for b in &basis {
            let ab = compose_diagrams(a, b).unwrap();
            let flipped = compose_diagrams(&b.vertical_flip(), &a.vertical_flip()).unwrap();
            match (ab, flipped) {
                (ScaledDiagram::Zero, ScaledDiagram::Zero) => {}
                (
                    ScaledDiagram::Scaled {
                        delta_exponent: e1,
                        diagram: d1,
                    },
                    ScaledDiagram::Scaled {
                        delta_exponent: e2,
                        diagram: d2,
                    },
                ) => {
                    assert_eq!(e1, e2);
                    assert_eq!(d1.vertical_flip(), d2);
                }
                other => panic!("flip mismatch {other:?}"),
            }
        }
    }
}

#[test]
fn composition_closure_on_small_bases() {
    // every composable pair of basis diagrams lands back in the basis
    for (k, j, m) in [(2u8, 2u8, 2u8), (3, 3, 3), (2, 4, 2), (1, 3, 5), (0, 2, 4)] {
        let lower = enumerate_basis(k, j);
        let upper = enumerate_basis(j, m);
        let target = enumerate_basis(k, m);
        for f in &lower {
            for g in &upper {
                match compose_diagrams(g, f).unwrap() {
                    ScaledDiagram::Zero => {}
                    ScaledDiagram::Scaled { diagram, .. } => {
                        assert!(target.contains(&diagram));
                    }
                }
            }
        }
    }
}

#[test]
fn associativity_including_delta_and_zero() {
    let b33 = enumerate_basis(3, 3);
    let b31 = enumerate_basis(3, 1);
    let b13 = enumerate_basis(1, 3);
    // a : 3->1, b : 3->3, c : 1->3 composing as a.(b.c) vs (a.b).c reversed:
    // use c : 1->3, b : 3->3, a : 3->1 so a.b.c : 1->1
    for a in &b31 {
        for b in &b33 {
            for c in &b13 {
                let left = match compose_diagrams(a, b).unwrap() {
                    ScaledDiagram::Zero => ScaledDiagram::Zero,
                    ScaledDiagram::Scaled {
                        delta_exponent,
                        diagram,
                    } => match compose_diagrams(&diagram, c).unwrap() {
                        ScaledDiagram::Zero => ScaledDiagram::Zero,
                        ScaledDiagram::Scaled {
                            delta_exponent: e2,
                            diagram: d2,
                        } => ScaledDiagram::Scaled {
                            delta_exponent: delta_exponent + e2,
                            diagram: d2,
                        },
                    },
                };
                let right = match compose_diagrams(b, c).unwrap() {
                    ScaledDiagram::Zero => ScaledDiagram::Zero,
                    ScaledDiagram::Scaled {
                        delta_exponent,
                        diagram,
                    } => match compose_diagrams(a, &diagram).unwrap() {
                        ScaledDiagram::Zero => ScaledDiagram::Zero,
                        ScaledDiagram::Scaled {
                            delta_exponent: e2,
                            diagram: d2,
                        } => ScaledDiagram::Scaled {
                            delta_exponent: delta_exponent + e2,
                            diagram: d2,
                        },
                    },
                };
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn text_round_trip_on_bases() {
    for (k, m) in [(2u8, 2u8), (3, 3), (1, 5), (4, 2), (0, 4)] {
        for d in enumerate_basis(k, m) {
            assert_eq!(parse_diagram(&format_diagram(&d)).unwrap(), d);
        }
    }
}

#[test]
fn render_sanity() {
    let id2 = Diagram::identity(2);
    let a = render(&id2, RenderFormat::Ascii);
    assert_eq!(a.lines().filter(|l| l.contains("|   |")).count(), 6);
    let t = render(&e1bar(), RenderFormat::Tikz);
    assert_eq!(t.matches("\\fill").count(), 2);
    assert_eq!(t.matches("controls").count(), 2);
    let nine = diag("k=3 m=3 : B1-B2* T2-T3 B3-T1*");
    let s = render(&nine, RenderFormat::Svg);
    assert_eq!(s.matches("<path").count(), 3);
    assert_eq!(s.matches("<circle").count(), 2);
}
