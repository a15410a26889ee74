//! Graphviz output against a checked-in golden file.

use std::path::Path;

use posetime::harness::dot::{export_dot, export_dot_labeled, DotMode};
use posetime::harness::lattice::{generate_lattice, LatticeChainSpec, LatticeSpec};

#[test]
fn coordinated_pair_matches_golden() {
    let chains = vec![
        LatticeChainSpec::rest("P", 0),
        LatticeChainSpec::rest("Q", 1),
    ];
    let l = generate_lattice(&LatticeSpec {
        u_size: 4,
        v_size: 3,
        chains,
    })
    .unwrap();
    let labels: Vec<String> = l.poset.events().map(|e| l.geometry.label(e)).collect();
    let dot = export_dot_labeled(&l.poset, &l.chains, DotMode::Hasse, &labels);
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/coordinated.dot");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &dot).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot, expected);
}

#[test]
fn geometric_mode_orders_chains_by_position() {
    let chains = vec![
        LatticeChainSpec::rest("P", 0),
        LatticeChainSpec::rest("Q", 2),
        LatticeChainSpec::rest("O", 1),
    ];
    let l = generate_lattice(&LatticeSpec {
        u_size: 8,
        v_size: 6,
        chains,
    })
    .unwrap();
    let dot = export_dot(&l.poset, &l.chains, DotMode::Geometric);
    let at = |name: &str| dot.find(&format!("\"{name}\" [pos")).unwrap();
    assert!(at("P") < at("O") && at("O") < at("Q"));
    assert!(dot.contains("\"P\" -- \"O\";"));
    assert!(dot.contains("\"O\" -- \"Q\";"));
    assert!(!dot.contains("\"P\" -- \"Q\";"));
}
