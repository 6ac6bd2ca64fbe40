//! The acceptance suite: eight release criteria, one test and one
//! printed PASS/FAIL line each. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::fs;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::Instant;

use mock_lie::algebra::{Algebra, StructureTensor};
use mock_lie::catalog::{catalog, catalog_entry, CATALOG_NAMES, NON_ABELIAN_NAMES};
use mock_lie::der::{
    constraint_matrix, der_structure_constants, derivation_basis, is_derivation, leibniz_defect,
    leibniz_defect_elements, verify_catalog,
};
use mock_lie::field::{FieldDescriptor, Scalar};
use mock_lie::matrix::{subspace_equal, ExactMatrix};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const Q: FieldDescriptor = FieldDescriptor::Rationals;

fn criterion(number: u32, name: &str, body: impl FnOnce() + UnwindSafe) {
    match catch_unwind(body) {
        Ok(()) => println!("ACCEPTANCE {number} {name}: PASS"),
        Err(payload) => {
            println!("ACCEPTANCE {number} {name}: FAIL");
            resume_unwind(payload);
        }
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = mock_lie_cli::run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).expect("stdout is UTF-8"))
}

#[test]
fn criterion_1_catalog_verification() {
    criterion(1, "catalog verification", || {
        let expected = [
            ("A_{1,2}", 2),
            ("A_{1,2}+A_{0,1}", 5),
            ("A_{1,3}", 4),
            ("A_{1,2}+A_{0,1}^2", 10),
            ("A_{1,3}+A_{0,1}", 8),
            ("A_{1,2}+A_{1,2}", 6),
            ("A_{1,4}", 7),
            ("A_{2,4}", 7),
        ];
        let reports = verify_catalog();
        assert_eq!(reports.len(), expected.len());
        for (report, (name, dim)) in reports.iter().zip(expected) {
            assert_eq!(report.catalog_name, name);
            assert!(report.spaces_equal, "{name}: spaces differ");
            assert_eq!(report.computed_dim, dim, "{name}: computed dimension");
            assert_eq!(report.reference_dim, dim, "{name}: reference dimension");
            assert!(report.discrepancy.is_none());
        }
        let (code, out) = cli(&["verify-catalog"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("EQUAL").count(), 8);
        assert!(out.contains("all 8 entries verified"));
    });
}

#[test]
fn criterion_2_axiom_suite() {
    criterion(2, "axiom suite with planted counterexamples", || {
        for entry in catalog() {
            let report = entry.check_axioms();
            assert!(report.is_mock_lie(), "{} fails its axioms", entry.name());
        }

        let mut noncomm = StructureTensor::new(2, Q);
        noncomm.set(1, 2, 1, Scalar::one(Q)).unwrap();
        let noncomm = Algebra::new("noncomm", noncomm).unwrap();
        let report = noncomm.check_axioms();
        assert!(!report.commutative);
        assert_eq!(report.commutativity_witness, Some((1, 2, 1)));

        let mut idem = StructureTensor::new(1, Q);
        idem.set(1, 1, 1, Scalar::one(Q)).unwrap();
        let idem = Algebra::new("idem", idem).unwrap();
        let report = idem.check_axioms();
        assert!(report.commutative);
        assert!(!report.jacobi);
        assert_eq!(report.jacobi_witness, Some((1, 1, 1, 1)));
    });
}

#[test]
fn criterion_3_exhaustive_gf5_oracle() {
    criterion(
        3,
        "exhaustive GF(5) oracle for the squaring algebra",
        || {
            let gf5 = FieldDescriptor::prime_field(5).unwrap();
            let entry = catalog_entry("A_{1,2}").unwrap().reinterpret(gf5).unwrap();
            let solver_dim = derivation_basis(&entry).dim();
            assert_eq!(solver_dim, 2);

            let start = Instant::now();
            let mut found = 0usize;
            for a in 0..5u64 {
                for b in 0..5u64 {
                    for c in 0..5u64 {
                        for d in 0..5u64 {
                            let entries = vec![
                                Scalar::residue(a, 5),
                                Scalar::residue(b, 5),
                                Scalar::residue(c, 5),
                                Scalar::residue(d, 5),
                            ];
                            let m = ExactMatrix::new(2, 2, gf5, entries).unwrap();
                            if is_derivation(&entry, &m).unwrap() {
                                found += 1;
                            }
                        }
                    }
                }
            }
            let elapsed = start.elapsed();
            assert_eq!(found, 25, "brute force count over GF(5)");
            assert_eq!(found, 5usize.pow(solver_dim as u32));
            assert!(
                elapsed.as_millis() < 100,
                "enumeration took {elapsed:?}, budget is 100ms"
            );
        },
    );
}

fn random_vector(rng: &mut StdRng, n: usize) -> Vec<Scalar> {
    (0..n)
        .map(|_| Scalar::from_integer(rng.gen_range(-9..=9), Q))
        .collect()
}

#[test]
fn criterion_4_soundness_and_completeness() {
    criterion(4, "zero Leibniz defect and rank-nullity", || {
        let mut rng = StdRng::seed_from_u64(0x4c656962);
        for entry in catalog() {
            let n = entry.dim();
            let space = derivation_basis(&entry);
            for d in space.basis() {
                for i in 1..=n {
                    for j in 1..=n {
                        let defect = leibniz_defect(&entry, d, i, j).unwrap();
                        assert!(
                            defect.iter().all(Scalar::is_zero),
                            "{}: defect on basis pair ({i}, {j})",
                            entry.name()
                        );
                    }
                }
                for _ in 0..100 {
                    let x = random_vector(&mut rng, n);
                    let y = random_vector(&mut rng, n);
                    let defect = leibniz_defect_elements(&entry, d, &x, &y).unwrap();
                    assert!(
                        defect.iter().all(Scalar::is_zero),
                        "{}: defect on random elements",
                        entry.name()
                    );
                }
            }
            let constraints = constraint_matrix(&entry);
            assert_eq!(
                constraints.rank() + space.dim(),
                n * n,
                "{}: rank + nullity",
                entry.name()
            );
        }
    });
}

#[test]
fn criterion_5_lie_structure_of_der() {
    criterion(5, "derivation algebras close under the bracket", || {
        for entry in catalog() {
            let tensor =
                der_structure_constants(&entry).unwrap_or_else(|e| panic!("{}: {e}", entry.name()));
            let dim = derivation_basis(&entry).dim();
            assert_eq!(tensor.dim(), dim);
            for p in 1..=dim {
                for q in 1..=dim {
                    for t in 1..=dim {
                        let forward = tensor.coeff(p, q, t);
                        let backward = tensor.coeff(q, p, t);
                        assert_eq!(
                            forward,
                            backward.negated(),
                            "{}: antisymmetry at ({p}, {q}, {t})",
                            entry.name()
                        );
                    }
                }
            }
            let der = Algebra::new("der", tensor).unwrap();
            for p in 1..=dim {
                for q in 1..=dim {
                    for r in 1..=dim {
                        let cycle = der.jacobiator(p, q, r).unwrap();
                        assert!(
                            cycle.iter().all(Scalar::is_zero),
                            "{}: Jacobi fails on ({p}, {q}, {r})",
                            entry.name()
                        );
                    }
                }
            }
        }
    });
}

fn random_invertible(rng: &mut StdRng, n: usize) -> ExactMatrix {
    loop {
        let entries: Vec<Scalar> = (0..n * n)
            .map(|_| Scalar::from_integer(rng.gen_range(-3..=3), Q))
            .collect();
        let candidate = ExactMatrix::new(n, n, Q, entries).unwrap();
        if candidate.inverse().is_ok() {
            return candidate;
        }
    }
}

#[test]
fn criterion_6_equivariance_under_base_change() {
    criterion(6, "derivations transform by conjugation", || {
        let mut rng = StdRng::seed_from_u64(0x42617365);
        let mut trials = 0usize;
        for entry in catalog() {
            let n = entry.dim();
            let basis = derivation_basis(&entry);
            for _ in 0..9 {
                let p = random_invertible(&mut rng, n);
                let p_inv = p.inverse().unwrap();
                let transported = entry.transport(&p).unwrap();
                let computed: Vec<Vec<Scalar>> = derivation_basis(&transported)
                    .basis()
                    .iter()
                    .map(|d| d.flatten_row_major().to_vec())
                    .collect();
                let conjugated: Vec<Vec<Scalar>> = basis
                    .basis()
                    .iter()
                    .map(|d| {
                        p_inv
                            .matmul(d)
                            .unwrap()
                            .matmul(&p)
                            .unwrap()
                            .flatten_row_major()
                            .to_vec()
                    })
                    .collect();
                assert!(
                    subspace_equal(&computed, &conjugated).unwrap(),
                    "{}: transported space differs from the conjugated one",
                    entry.name()
                );
                trials += 1;
            }
        }
        assert!(trials >= 100, "only {trials} base changes exercised");
    });
}

#[test]
fn criterion_7_abelian_baseline() {
    criterion(7, "abelian entries have the full matrix algebra", || {
        let abelian: Vec<&str> = CATALOG_NAMES
            .iter()
            .filter(|name| !NON_ABELIAN_NAMES.contains(name))
            .copied()
            .collect();
        assert_eq!(abelian, ["A_{0,1}", "A_{0,1}^2", "A_{0,1}^3", "A_{0,1}^4"]);
        let mut dims = Vec::new();
        for name in &abelian {
            let entry = catalog_entry(name).unwrap();
            let space = derivation_basis(&entry);
            assert_eq!(space.dim(), entry.dim() * entry.dim(), "{name}");
            dims.push(space.dim());
        }
        assert_eq!(dims, [1, 4, 9, 16]);
    });
}

#[test]
fn criterion_8_io_contract() {
    criterion(8, "round-trip parsing and the exit-code table", || {
        for name in CATALOG_NAMES {
            let entry = catalog_entry(name).unwrap();
            let text = mock_lie_cli::doc::serialize(entry.tensor());
            let reparsed = mock_lie_cli::doc::parse(&text).unwrap();
            assert_eq!(&reparsed, entry.tensor(), "{name} round-trip");
            assert_eq!(
                text,
                mock_lie_cli::doc::serialize(&reparsed),
                "{name} byte determinism"
            );
        }

        let dir = tempfile::TempDir::new().unwrap();
        let write = |name: &str, content: &str| {
            let path = dir.path().join(name);
            fs::write(&path, content).unwrap();
            path.to_str().unwrap().to_string()
        };
        let good = write("good.alg", "field rational\ndim 2\ne1 * e1 = e2\n");
        let noncomm = write(
            "noncomm.alg",
            "field rational\ndim 2\nsymmetric off\ne1 * e2 = e1\n",
        );
        let idem = write("idem.alg", "field rational\ndim 1\ne1 * e1 = e1\n");
        let bad = write("bad.alg", "field rational\ndim 2\ne1 * e3 = e1\n");
        let missing = dir.path().join("missing.alg").to_str().unwrap().to_string();

        let table: Vec<(Vec<&str>, i32)> = vec![
            (vec!["check", &good], 0),
            (vec!["derive", &good], 0),
            (vec!["verify-catalog"], 0),
            (vec!["catalog", "list"], 0),
            (vec!["check", &noncomm], 1),
            (vec!["check", &idem], 1),
            (vec!["check", &bad], 2),
            (vec!["check", &missing], 2),
            (vec!["frobnicate"], 2),
            (vec!["catalog", "show", "A_{9,9}"], 2),
            (vec!["--field", "gf:4", "catalog", "list"], 2),
        ];
        for (args, expected) in table {
            let (code, _) = cli(&args);
            assert_eq!(code, expected, "exit code for {args:?}");
        }
    });
}
