use std::path::Path;

use verlinde_core::app::corpus::FILES;
use verlinde_core::io::{parse, parse_algebra, parse_word, Kind};

#[test]
fn every_shipped_file_round_trips_byte_for_byte() {
    for (name, text) in FILES {
        let kind = Kind::from_path(Path::new(name)).unwrap();
        match parse(kind, text) {
            Ok(doc) => assert_eq!(&doc.serialize(), text, "{name}"),
            Err(e) => panic!("{name}: {e}"),
        }
    }
}

#[test]
fn corpus_directory_matches_embedded_list() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut on_disk: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    on_disk.sort();
    let embedded: Vec<String> = FILES.iter().map(|(n, _)| n.to_string()).collect();
    assert_eq!(on_disk, embedded);
    for (name, text) in FILES {
        assert_eq!(std::fs::read_to_string(dir.join(name)).unwrap(), *text);
    }
}

#[test]
fn broken_word_fails_at_its_second_layer() {
    let lookup = |n: &str| FILES.iter().find(|(f, _)| *f == n).unwrap().1;
    let word = parse_word(lookup("broken.word")).unwrap();
    let a = parse_algebra(lookup("z2.algebra")).unwrap().frobenius().unwrap();
    let e = a.evaluate_word(&word).unwrap_err().to_string();
    assert!(e.contains("layer 2"), "{e}");
}
