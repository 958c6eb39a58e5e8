use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use itertools::Itertools;
use pets_core::{CipherSuite, Field, SchemeId, SchemeParams};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

const GOLDEN_DIGESTS: [&str; 3] = [
    "0b1438055238cd1a263f1ac4e7a3fceab5e4d16219cc3d81a2f4c4111df4c488",
    "9088fe6f057d5e30bc7707939393e0237258d3a8dcb86d5ba83a7b0e99f8876d",
    "2d63065c44ec199771cf0b533a35121c3e1d34e5ae91511324b5488662753c97",
];

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn pets(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pets"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn split_golden(out: &Path) -> Output {
    pets(&[
        "split",
        "-i",
        golden("secret.bin").to_str().unwrap(),
        "--scheme",
        "pets",
        "-t",
        "2",
        "-n",
        "3",
        "--suite",
        "test-keystream",
        "--field",
        "gf256",
        "-o",
        out.to_str().unwrap(),
        "--seed",
        "42",
    ])
}

#[test]
fn seeded_split_reproduces_golden_files() {
    for _ in 0..2 {
        let dir = tempfile::tempdir().unwrap();
        let out = split_golden(dir.path());
        assert!(out.status.success());
        assert!(String::from_utf8_lossy(&out.stderr).contains("WARNING"));
        for (i, digest) in GOLDEN_DIGESTS.iter().enumerate() {
            let name = format!("share_{}.pet", i + 1);
            let produced = fs::read(dir.path().join(&name)).unwrap();
            assert_eq!(&sha256(&produced), digest);
            assert_eq!(produced, fs::read(golden(&name)).unwrap());
        }
    }
}

#[test]
fn join_golden_subsets() {
    let secret = fs::read(golden("secret.bin")).unwrap();
    assert_eq!(secret.len(), 128);
    let names = ["share_1.pet", "share_2.pet", "share_3.pet"];
    for k in 2..=3 {
        for subset in names.iter().combinations(k) {
            let paths: Vec<String> = subset.iter().map(|n| golden(n).display().to_string()).collect();
            let mut args = vec!["join"];
            args.extend(paths.iter().map(String::as_str));
            let out = pets(&args);
            assert!(out.status.success(), "{subset:?}");
            assert_eq!(out.stdout, secret);
        }
    }
}

#[test]
fn join_single_share_is_insufficient() {
    let out = pets(&["join", golden("share_2.pet").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("need 2"));
}

#[test]
fn inspect_reports_golden_header() {
    let out = pets(&["inspect", golden("share_1.pet").to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for line in [
        "scheme: pets",
        "field: gf256",
        "cipher: test-keystream",
        "t: 2",
        "n: 3",
        "index: 1",
        "orig_len: 128",
        "poly_part_len: 32",
        "frag_part_len: 48",
        "payload_symbols: 80",
    ] {
        assert!(text.lines().any(|l| l == line), "missing `{line}` in\n{text}");
    }
}

#[test]
fn inspect_rejects_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let bytes = fs::read(golden("share_1.pet")).unwrap();

    let truncated = dir.path().join("truncated.pet");
    fs::write(&truncated, &bytes[..30]).unwrap();
    assert_eq!(pets(&["inspect", truncated.to_str().unwrap()]).status.code(), Some(7));

    let mut v2 = bytes.clone();
    v2[4] = 2;
    let future = dir.path().join("v2.pet");
    fs::write(&future, v2).unwrap();
    assert_eq!(pets(&["inspect", future.to_str().unwrap()]).status.code(), Some(7));
    assert_eq!(
        pets(&["join", future.to_str().unwrap(), golden("share_2.pet").to_str().unwrap()])
            .status
            .code(),
        Some(7)
    );

    let mut magic = bytes;
    magic[0] = b'Q';
    let wrong = dir.path().join("magic.pet");
    fs::write(&wrong, magic).unwrap();
    assert_eq!(pets(&["inspect", wrong.to_str().unwrap()]).status.code(), Some(7));

    let missing = dir.path().join("nope.pet");
    assert_eq!(pets(&["inspect", missing.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn ssms_shares_inspect_as_ssms() {
    let dir = tempfile::tempdir().unwrap();
    let out = pets(&[
        "split",
        "-i",
        golden("secret.bin").to_str().unwrap(),
        "--scheme",
        "ssms",
        "-t",
        "2",
        "-n",
        "3",
        "--suite",
        "test-keystream",
        "-o",
        dir.path().to_str().unwrap(),
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    let out = pets(&["inspect", dir.path().join("share_3.pet").to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "scheme: ssms"));
    assert!(text.lines().any(|l| l == "index: 3"));
}

#[test]
fn single_share_toy_otp() {
    let dir = tempfile::tempdir().unwrap();
    let secret = dir.path().join("secret");
    fs::write(&secret, b"tiny secret").unwrap();
    let out = pets(&[
        "split",
        "-i",
        secret.to_str().unwrap(),
        "-t",
        "1",
        "-n",
        "1",
        "--suite",
        "toy-otp",
        "-o",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let restored = dir.path().join("restored");
    let out = pets(&[
        "join",
        dir.path().join("share_1.pet").to_str().unwrap(),
        "-o",
        restored.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read(restored).unwrap(), b"tiny secret");
}

#[test]
fn split_parameter_errors() {
    let dir = tempfile::tempdir().unwrap();
    let secret = golden("secret.bin");
    let base = ["split", "-i", secret.to_str().unwrap(), "-o", dir.path().to_str().unwrap()];

    let mut args = base.to_vec();
    args.extend(["-t", "2", "-n", "300"]);
    let out = pets(&args);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n exceeds field capacity"));

    let mut args = base.to_vec();
    args.extend(["-t", "4", "-n", "3"]);
    assert_eq!(pets(&args).status.code(), Some(2));

    let mut args = base.to_vec();
    args.extend(["-t", "2", "-n", "3", "--suite", "stream256", "--seed", "7"]);
    assert_eq!(pets(&args).status.code(), Some(4));

    let out = pets(&["split", "-i", "/nonexistent/secret", "-t", "1", "-n", "1", "-o", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn mixed_sharings_are_rejected() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    split_golden(a.path());
    let out = pets(&[
        "split",
        "-i",
        golden("secret.bin").to_str().unwrap(),
        "-t",
        "2",
        "-n",
        "4",
        "--suite",
        "test-keystream",
        "-o",
        b.path().to_str().unwrap(),
        "--seed",
        "42",
    ]);
    assert!(out.status.success());
    let out = pets(&[
        "join",
        a.path().join("share_1.pet").to_str().unwrap(),
        b.path().join("share_2.pet").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(6));
    let one = a.path().join("share_1.pet");
    let out = pets(&["join", one.to_str().unwrap(), one.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(6));
}

#[test]
fn filesystem_matches_library() {
    let secret = fs::read(golden("secret.bin")).unwrap();
    let params = SchemeParams {
        scheme: SchemeId::Pets,
        t: 2,
        n: 3,
        field: Field::Gf256,
        suite: CipherSuite::TestKeystream,
    };
    let shares = pets_core::split(&secret, &params, &mut ChaCha20Rng::seed_from_u64(42)).unwrap();
    for share in &shares {
        let on_disk = fs::read(golden(&format!("share_{}.pet", share.index()))).unwrap();
        assert_eq!(share.to_bytes(), on_disk);
    }
}

#[test]
fn rates_reference_trio() {
    let out = pets(&["rates", "--paper-examples", "--csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("shamir,2,3,512,128,512,1536,1/3,"));
    assert!(text.contains("ssms,2,3,512,128,384,1152,4/9,"));
    assert!(text.contains("pets,2,3,512,128,320,960,8/15,"));
    let out = pets(&["rates", "--paper-examples"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
}

#[test]
fn rates_delta() {
    let out = pets(&[
        "rates", "--scheme", "pets", "--delta", "1/2", "--n", "8", "--sym-s", "4096", "--sym-k", "128", "--csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // (1/2) * 4096 / 4224 = 16/33
    assert!(text.contains("pets,4,8,4096,128,1056,8448,16/33,"), "{text}");
    assert!(text.contains("= 16/33 (matches)"));

    let out = pets(&["rates", "--scheme", "pets", "--delta", "1/3", "--n", "8"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pets(&["rates"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rates_sweep_csv() {
    let out = pets(&["rates", "--sweep", "--max-n", "4", "--csv"]);
    assert!(out.status.success());
    // header + 3 schemes * (1 + 2 + 3 + 4) rows
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1 + 3 * 10);
}
