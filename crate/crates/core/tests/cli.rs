mod common;

use common::cli;
use serde_json::json;

#[test]
fn validate_sl2() {
    let (code, doc) = cli(&["validate", "examples/sl2.json"]);
    assert_eq!(code, 0);
    assert_eq!(doc["valid"], json!(true));
}

#[test]
fn classify_at_three() {
    let (code, doc) = cli(&["isotypy", "classify", "--p", "3", "examples/sl2-to-pgl2.json"]);
    assert_eq!(code, 0);
    assert_eq!(doc, json!({"kernel_connected": false, "kernel_finite": true, "surjective": true, "injective": false}));
}

#[test]
fn wreath_verify_c3() {
    let (code, doc) = cli(&["wreath", "verify", "--H", "examples/c3.json", "--A", "examples/c2-inv.json", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["characters"].as_array().unwrap().len(), 9);
    assert_eq!(doc["group_order"], json!(72));
}

#[test]
fn schema_errors_exit_one() {
    for args in [
        vec!["validate", "examples/missing.json"],
        vec!["validate", "examples/sl2-to-pgl2.json"],
        vec!["validate", "examples/mutated/doubled-bc1.json"],
        vec!["isotypy", "classify", "--p", "4", "examples/sl2-to-pgl2.json"],
        vec!["weyl", "normalizer", "examples/a3.json", "--I", "0,x"],
        vec!["group", "table", "examples/a3.json"],
        vec!["clifford", "lemma-abelian", "--G", "examples/s4.json", "--N", "examples/c3.json"],
    ] {
        let (code, _) = cli(&args);
        assert_eq!(code, 1, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["levi", "decompose", "--steinberg", "examples/d4-triality.json", "--I", "1"];
    assert_eq!(cli(&args), cli(&args));
    let args = ["group", "table", "examples/gl2f3.json"];
    assert_eq!(cli(&args), cli(&args));
}

#[test]
fn steinberg_kinds() {
    for (file, kind) in [("a3-split.json", "split"), ("d4-triality.json", "twisted"), ("b2-suzuki.json", "very_twisted")] {
        let (code, doc) = cli(&["steinberg", "classify", &format!("examples/{file}")]);
        assert_eq!(code, 0);
        assert_eq!(doc["kind"], json!(kind), "{file}");
    }
}

#[test]
fn every_subcommand_runs() {
    let runs: &[&[&str]] = &[
        &["datum", "B2xT1", "--isogeny", "adj"],
        &["weyl", "order", "examples/f4.json"],
        &["weyl", "normalizer", "examples/d4.json", "--I", "0,2,3"],
        &["fixed", "--steinberg", "examples/a5-flip.json", "--I", "0,2,4"],
        &["levi", "decompose", "examples/a5.json", "--I", "0,2,4"],
        &["isotypy", "factor", "examples/sl2-to-gl2.json"],
        &["isotypy", "dual", "examples/frobenius-a2.json"],
        &["group", "classes", "examples/s4.json"],
        &["clifford", "restrict", "--G", "examples/gl2f3.json", "--N", "examples/sl2f3.json", "--chi", "7"],
        &["clifford", "induce", "--G", "examples/s3.json", "--N", "examples/c3.json"],
        &["clifford", "stabilizer", "--G", "examples/s3.json", "--N", "examples/c3.json", "--theta", "1"],
        &["clifford", "extend", "--G", "examples/q8.json", "--N", "examples/z2-in-q8.json"],
        &["clifford", "lemma-equivalence", "--G", "examples/gl2f3.json", "--N", "examples/sl2f3.json"],
        &["clifford", "lemma-abelian", "--G", "examples/q8.json", "--N", "examples/z2-in-q8.json"],
        &["wreath", "build", "--H", "examples/c2xc2.json", "--A", "examples/c2-swap.json", "--n", "2"],
    ];
    for args in runs {
        let (code, doc) = cli(args);
        assert_eq!(code, 0, "{args:?}: {doc}");
        assert!(doc.is_object(), "{args:?}");
    }
}

#[test]
fn embedding_by_images() {
    let dir = std::env::temp_dir().join(format!("levikit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // Q8 inside SL2(3) through explicit generator images
    let images = dir.join("q8-in-sl2f3.json");
    let g = levikit::io::read_group(&common::example("sl2f3.json")).unwrap();
    let n = levikit::io::read_group(&common::example("q8.json")).unwrap();
    let fours: Vec<_> = g.elements().iter().filter(|x| x.order() == 4).cloned().collect();
    let pair = fours
        .iter()
        .flat_map(|a| fours.iter().map(move |b| (a, b)))
        .find(|(a, b)| levikit::clifford::SubgroupEmbedding::new(n.clone(), g.clone(), vec![(*a).clone(), (*b).clone()]).is_ok())
        .unwrap();
    std::fs::write(&images, serde_json::to_string(&[pair.0.one_based(), pair.1.one_based()]).unwrap()).unwrap();
    let (code, doc) = cli(&[
        "clifford",
        "lemma-equivalence",
        "--G",
        "examples/sl2f3.json",
        "--N",
        "examples/q8.json",
        "--images",
        images.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{doc}");
    assert_eq!(doc["reports"].as_array().unwrap().len(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}
