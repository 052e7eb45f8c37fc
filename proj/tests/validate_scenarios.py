"""Validate every shipped scenario against the published schema."""

import json
import pathlib
import sys

import jsonschema


def main(schema_path, scenario_dir):
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    files = sorted(pathlib.Path(scenario_dir).glob("*.json"))
    for path in files:
        for err in validator.iter_errors(json.loads(path.read_text())):
            print(f"{path.name}: {err.json_path}: {err.message}")
            failures += 1
    # the schema must also reject what the parser rejects
    bad = [
        {"command": "area", "map": {"regular_polygon": 3}, "colour": 1},
        {"command": "thm54", "map": {"regular_polygon": 3}, "m_values": [0.5]},
        {"command": "no-such-command"},
    ]
    for doc in bad:
        if validator.is_valid(doc):
            print(f"schema accepted an invalid document: {json.dumps(doc)}")
            failures += 1
    print(f"{len(files)} scenarios checked, {failures} problems")
    return 1 if failures or not files else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
