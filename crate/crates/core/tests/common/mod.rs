#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use rouge2::{SynonymDictionary, TaggedText};

pub const REF_SUM: &str = "The phone is very lightweight.\n\nThe display is also very bright and clear.\n";
pub const SYS_SUM1: &str = "Lightweight phone. Bright screen. Screen is very clear.\n";
pub const SYS_SUM2: &str = "I really love this phone it is just superb, it is extremely lightweight.\n\n\
Hmmm, this was actually a gift to my girlfriend and I do feel that the screen is quite nice and extremely bright.\n\n\
In terms of screen, the screen is really clear and crisp.\n";

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn example_dir() -> PathBuf {
    fixtures().join("example-1.1")
}

pub fn systems_dir() -> PathBuf {
    example_dir().join("systems")
}

pub fn references_dir() -> PathBuf {
    example_dir().join("references")
}

/// The dictionary with exactly display↔screen.
pub fn display_screen() -> Arc<SynonymDictionary> {
    Arc::new(rouge2::load_dictionary(example_dir().join("synonyms.txt")).unwrap())
}

pub fn gold_tagged(name: &str) -> TaggedText {
    let path = if name.starts_with("phone.") {
        references_dir().join(name)
    } else {
        systems_dir().join(name)
    };
    rouge2::parse_tagged(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Expected (recall, precision, f) rows, 3-decimal values as published.
pub type Row = (&'static str, [f64; 3]);

/// ROUGE-1 rows per system: plain, +Synonyms, +StopWordRemoval, +StopWordRemoval+Synonyms.
pub const TABLE_ROUGE1_SYS1: [Row; 4] = [
    ("ROUGE-1", [0.462, 0.750, 0.571]),
    ("ROUGE-1 + Synonyms", [0.538, 0.875, 0.667]),
    ("ROUGE-1 + StopWordRemoval", [0.800, 0.667, 0.727]),
    ("ROUGE-1 + StopWordRemoval + Synonyms", [1.000, 0.833, 0.909]),
];
pub const TABLE_ROUGE1_SYS2: [Row; 4] = [
    ("ROUGE-1", [0.692, 0.196, 0.305]),
    ("ROUGE-1 + Synonyms", [0.769, 0.217, 0.339]),
    ("ROUGE-1 + StopWordRemoval", [0.800, 0.174, 0.286]),
    ("ROUGE-1 + StopWordRemoval + Synonyms", [1.000, 0.217, 0.357]),
];

/// Topic rows per system with POS NN|JJ: Topic, Topic+Synonyms, TopicUniq, TopicUniq+Synonyms.
pub const TABLE_TOPIC_SYS1: [Row; 4] = [
    ("ROUGE-Topic NN|JJ", [0.800, 0.667, 0.727]),
    ("ROUGE-Topic NN|JJ + Synonyms", [1.000, 0.833, 0.909]),
    ("ROUGE-TopicUniq NN|JJ", [0.800, 0.800, 0.800]),
    ("ROUGE-TopicUniq NN|JJ + Synonyms", [1.000, 1.000, 1.000]),
];
pub const TABLE_TOPIC_SYS2: [Row; 4] = [
    ("ROUGE-Topic NN|JJ", [0.800, 0.308, 0.444]),
    ("ROUGE-Topic NN|JJ + Synonyms", [1.000, 0.385, 0.556]),
    ("ROUGE-TopicUniq NN|JJ", [0.800, 0.364, 0.500]),
    ("ROUGE-TopicUniq NN|JJ + Synonyms", [1.000, 0.455, 0.625]),
];

pub const TOLERANCE: f64 = 0.0005;
