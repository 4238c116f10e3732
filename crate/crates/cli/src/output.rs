use std::io::{self, Write};

use serde::Serialize;
use serde_json::{Map, Value};

/// Bumped whenever a top-level output object changes shape.
pub const SCHEMA_VERSION: u32 = 1;

/// `value` as a JSON object with `schema_version` as its first key.
pub fn versioned<T: Serialize>(value: &T) -> Value {
    let mut out = Map::new();
    out.insert("schema_version".into(), SCHEMA_VERSION.into());
    match serde_json::to_value(value).expect("outputs serialize") {
        Value::Object(fields) => out.extend(fields),
        other => {
            out.insert("value".into(), other);
        }
    }
    Value::Object(out)
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// One `key  value` line per field.
pub fn key_values(v: &Value) -> String {
    let Value::Object(fields) = v else {
        return cell(v) + "\n";
    };
    let width = fields.keys().map(String::len).max().unwrap_or(0);
    fields
        .iter()
        .map(|(k, v)| format!("{k:width$}  {}\n", cell(v)))
        .collect()
}

/// Column table over objects sharing the keys of the first row.
pub fn rows(items: &[Value]) -> String {
    let Some(Value::Object(first)) = items.first() else {
        return String::new();
    };
    let keys: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = items
        .iter()
        .map(|item| keys.iter().map(|k| item.get(k.as_str()).map(cell).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| cells.iter().map(|r| r[i].len()).chain([k.len()]).max().unwrap())
        .collect();
    let line = |r: Vec<&str>| {
        r.iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
            + "\n"
    };
    let mut out = line(keys.iter().map(|k| k.as_str()).collect());
    for r in &cells {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

pub fn emit(table: bool, value: &Value) -> io::Result<()> {
    let mut stdout = io::stdout().lock();
    if table {
        stdout.write_all(key_values(value).as_bytes())
    } else {
        writeln!(stdout, "{value}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn schema_version_comes_first() {
        let v = versioned(&json!({"moves": 7}));
        assert_eq!(v.to_string(), r#"{"schema_version":1,"moves":7}"#);
    }

    #[test]
    fn tables() {
        let v = json!({"a": 1, "long_key": [1, 2], "s": "x"});
        assert_eq!(key_values(&v), "a         1\nlong_key  1,2\ns         x\n");
        let t = rows(&[json!({"k": 1, "v": "aa"}), json!({"k": 22, "v": null})]);
        assert_eq!(t, "k   v\n1   aa\n22  -\n");
    }
}
