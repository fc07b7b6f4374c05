use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub type CmdResult = Result<OutputRecord, Box<dyn std::error::Error + Send + Sync>>;

/// What a command did: its inputs, its results and the text shown when
/// `--json` is not given. Big integers are carried as decimal strings.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub status: i32,
    #[serde(skip)]
    pub text: String,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            status: 0,
            text: String::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(
            key.into(),
            serde_json::to_value(value).expect("inputs serialize"),
        );
        self
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(
            key.into(),
            serde_json::to_value(value).expect("results serialize"),
        );
    }

    pub fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }
}
