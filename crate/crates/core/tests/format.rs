use std::path::PathBuf;

use hopfcyc::fixtures::{controls, cyclic_group_algebra, library};
use hopfcyc::format::{parse, parse_unchecked, write, Document, Structure};
use hopfcyc::hopf::ModComodule;
use hopfcyc::{Error, Fp, Matrix, Rational};
use proptest::prelude::*;

type Q = Rational;

fn shipped() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn library_round_trips_byte_identically() {
    for doc in library::<Q>().into_iter().chain(controls()) {
        let text = write(&doc).unwrap();
        let back = parse_unchecked::<Q>(&text).unwrap();
        assert_eq!(back, doc, "{}", doc.name);
        assert_eq!(write(&back).unwrap(), text, "{}", doc.name);
    }
}

#[test]
fn library_passes_validation() {
    for doc in library::<Q>() {
        let text = write(&doc).unwrap();
        parse::<Q>(&text).unwrap_or_else(|e| panic!("{}: {e}", doc.name));
    }
}

#[test]
fn controls_fail_validation_with_named_identities() {
    let expected = [("corrupted-antipode-z2", "antipode"), ("regular-coalgebra-z2", "compatibility"), ("nonassociative", "associativ")];
    let docs = controls::<Q>();
    assert_eq!(docs.len(), expected.len());
    for (doc, (name, identity)) in docs.iter().zip(expected) {
        assert_eq!(doc.name, name);
        match parse::<Q>(&write(doc).unwrap()) {
            Err(Error::Validation(msg)) => assert!(msg.contains(identity), "{name}: {msg}"),
            other => panic!("{name}: {other:?}"),
        }
    }
}

#[test]
fn nonassociative_failure_names_the_triple() {
    let doc = controls::<Q>().into_iter().find(|d| d.name == "nonassociative").unwrap();
    let Err(Error::Validation(msg)) = parse::<Q>(&write(&doc).unwrap()) else { panic!() };
    // (aa)a = ba = b but a(aa) = ab = 0
    assert!(msg.contains("[1, 1, 1]") || msg.contains("(1, 1, 1)"), "{msg}");
}

#[test]
fn shipped_files_match_the_library() {
    for (dir, docs) in [(shipped(), library::<Q>()), (shipped().join("controls"), controls())] {
        for doc in docs {
            let path = dir.join(format!("{}.json", doc.name));
            let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(text, write(&doc).unwrap(), "{}", path.display());
        }
    }
}

fn z2_text() -> String {
    write(&Document::new("z2", Structure::Hopf(cyclic_group_algebra::<Q>(2)))).unwrap()
}

#[test]
fn empty_basis_is_a_parse_error() {
    let text = z2_text().replacen("\"basis\": [\"h0\", \"h1\"]", "\"basis\": []", 1);
    assert!(text.contains("\"basis\": []"));
    assert!(matches!(parse::<Q>(&text), Err(Error::Parse(m)) if m.contains("empty basis")));
}

#[test]
fn malformed_documents_are_parse_errors() {
    let base = z2_text();
    let cases = [
        base.replacen("\"kind\": \"hopf\"", "\"kind\": \"group\"", 1),
        base.replacen("\"field\": \"Q\"", "\"field\": \"9\"", 1),
        base.replacen("[1, 1, 0, 1, 1]", "[1, 1, 5, 1, 1]", 1),
        base.replacen("[1, 1, 0, 1, 1]", "[1, 1, 0, 1, 0]", 1),
        base.replacen("[1, 1, 0, 1, 1]", "[1, 1, 1]", 1),
        base.replacen("\"name\"", "\"nom\"", 1),
        base[..base.len() / 2].to_string(),
    ];
    for (k, text) in cases.iter().enumerate() {
        assert_ne!(text, &base, "case {k} did not apply");
        assert!(matches!(parse::<Q>(text), Err(Error::Parse(_))), "case {k}: {:?}", parse::<Q>(text));
    }
}

#[test]
fn truncated_document_reports_a_line() {
    let base = z2_text();
    let Err(Error::Parse(msg)) = parse::<Q>(&base[..base.len() / 2]) else { panic!() };
    assert!(msg.starts_with("line "), "{msg}");
}

#[test]
fn rational_documents_reduce_into_prime_fields() {
    let doc = parse::<Fp<7>>(&z2_text()).unwrap();
    assert_eq!(doc.structure, Structure::Hopf(cyclic_group_algebra::<Fp<7>>(2)));
    let text = write(&doc).unwrap();
    assert!(text.contains("\"field\": \"7\""));
    assert!(matches!(parse::<Q>(&text), Err(Error::Parse(_))));
    assert!(matches!(parse::<Fp<5>>(&text), Err(Error::Parse(_))));
    assert_eq!(parse::<Fp<7>>(&text).unwrap(), doc);
}

fn small_rational() -> impl Strategy<Value = Q> {
    (-20i64..20, 1i64..9).prop_map(|(n, d)| Q::new(n, d))
}

proptest! {
    #[test]
    fn random_coefficient_modules_round_trip(dim in 1usize..4, action in proptest::collection::vec(small_rational(), 18), coaction in proptest::collection::vec(small_rational(), 18)) {
        let hopf = cyclic_group_algebra::<Q>(2);
        let a = Matrix::from_fn(dim, 2 * dim, |c| (0..dim).map(|r| (r, action[(c * dim + r) % 18].clone())).collect());
        let b = Matrix::from_fn(2 * dim, dim, |c| (0..2 * dim).map(|r| (r, coaction[(c * 2 * dim + r) % 18].clone())).collect());
        let m = ModComodule::new(hopf, dim, a, b).unwrap();
        let doc = Document::new("random", Structure::ModComodule(m));
        let text = write(&doc).unwrap();
        let back = parse_unchecked::<Q>(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(write(&back).unwrap(), text);
    }
}
