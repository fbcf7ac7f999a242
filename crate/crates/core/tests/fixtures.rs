use chowkit::fixtures::{self, Format};
use sha2::{Digest, Sha256};

const CHECKSUMS: [(&str, &str); 6] = [
    ("elliptic4", "f4eb9ded04d13799bdf6602dce20e4f9834370298a111c688b709a018e45a36b"),
    ("hm-betti", "574e5f73a6b2c89ab8afbc247346941231d8bc605e52e48617c8c45b7d4e6109"),
    ("nullcorr-betti", "e67c5fceaebab6d42227d978cff5744065530f758c7157765f33ba1248522184"),
    ("pfaffian8", "e529367d8f0ba73f2b0ac3041bde557e854351be8fc2011b278fa3c772822158"),
    ("scroll3", "28e61e9ef466ad2fe36532420c6781569d051e2a8c4a4cf6a6e7c8612ed39ead"),
    ("stiefel6", "092dab27fea260ee8e052315aa647a5642543f9b85f2eb7a5fe337620bafec81"),
];

#[test]
fn shipped_fixtures_are_unchanged() {
    for (id, want) in CHECKSUMS {
        let raw = fixtures::raw_json(id).unwrap();
        let got: String = Sha256::digest(raw.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(got, want, "{id}");
    }
}

#[test]
fn every_format_renders_and_json_round_trips() {
    for (id, _) in CHECKSUMS {
        let fx = fixtures::load(id).unwrap();
        for format in [Format::Text, Format::Latex, Format::Csv] {
            assert!(!fixtures::emit(id, format).unwrap().is_empty());
        }
        let again = fixtures::parse_json(&fixtures::emit(id, Format::Json).unwrap()).unwrap();
        assert!(again.same_data(&fx), "{id}");
        assert_eq!(fixtures::emit(id, Format::Json).unwrap(), again.render(Format::Json));
    }
}

#[test]
fn printed_cells() {
    let pf = fixtures::load_bracket("pfaffian8").unwrap();
    assert_eq!(pf.cell(0, 1).as_deref(), Some("[245]"));
    let scroll = fixtures::load_bracket("scroll3").unwrap();
    assert_eq!(scroll.cell(0, 0).as_deref(), Some("[034]"));
    let ell = fixtures::load_bracket("elliptic4").unwrap();
    assert_eq!(ell.cell(1, 3).as_deref(), Some("[12]"));
}

#[test]
fn unknown_fixture_is_an_error() {
    assert!(matches!(fixtures::load("nope"), Err(chowkit::Error::UnknownFixture(_))));
}

#[test]
fn skew_fixture_is_alternating() {
    let m = chowkit::ternary::pfaffian_matrix_quadrics::<chowkit::Rational>().unwrap();
    assert!(m.is_alternating());
}
