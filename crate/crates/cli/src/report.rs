//! Report assembly: text or JSON, deterministic field order, optional
//! timestamp.

use clap::ValueEnum;
use serde_json::json;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    /// DOT applies to --out graph artifacts; reports fall back to text.
    Dot,
}

pub struct Report {
    format: Format,
    quiet: bool,
    no_timestamp: bool,
    command: String,
    status_ok: bool,
    lines: Vec<String>,
    data: serde_json::Value,
}

impl Report {
    pub fn new(format: Format, quiet: bool, no_timestamp: bool) -> Self {
        Report {
            format,
            quiet,
            no_timestamp,
            command: String::new(),
            status_ok: true,
            lines: Vec::new(),
            data: serde_json::Value::Null,
        }
    }

    pub fn command(&mut self, name: &str) {
        self.command = name.to_string();
    }

    pub fn line(&mut self, text: String) {
        self.lines.push(text);
    }

    pub fn data(&mut self, value: serde_json::Value) {
        self.data = value;
    }

    pub fn set_status(&mut self, ok: bool) {
        self.status_ok = ok;
    }

    pub fn to_json_string(&self) -> String {
        let mut body = json!({
            "command": self.command,
            "status": if self.status_ok { "ok" } else { "fail" },
            "report": self.lines,
            "data": self.data,
        });
        if !self.no_timestamp {
            body["timestamp"] = json!(chrono::Utc::now().to_rfc3339());
        }
        serde_json::to_string_pretty(&body).expect("serializable")
    }

    pub fn print(&self) {
        if self.quiet {
            return;
        }
        match self.format {
            Format::Json => println!("{}", self.to_json_string()),
            Format::Text | Format::Dot => {
                for line in &self.lines {
                    println!("{}", line);
                }
            }
        }
    }
}
