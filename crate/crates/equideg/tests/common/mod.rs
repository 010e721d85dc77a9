#![allow(dead_code)]

pub mod fixtures;

use std::sync::OnceLock;

use equideg::model_io::{load_model, Model};

pub const BUNDLED: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/models/six-membranes.json");

/// The bundled six-membrane model, loaded once per test binary.
pub fn model() -> &'static Model {
    static MODEL: OnceLock<Model> = OnceLock::new();
    MODEL.get_or_init(|| load_model(BUNDLED).expect("bundled model loads"))
}

/// Irreducibles occurring in the bundled model.
pub const JS: [usize; 3] = [0, 2, 3];
