#!/usr/bin/env python3
"""Sentence-transformer embeddings of a raw corpus, written as EMB1."""

import argparse
import csv
import json
import struct
import sys
from pathlib import Path

import numpy as np

DEFAULT_MODEL = "sentence-transformers/all-MiniLM-L6-v2"


def read_texts(path):
    path = Path(path)
    texts = []
    if path.suffix.lower() == ".csv":
        with path.open(newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames is None or "text" not in reader.fieldnames:
                raise ValueError(f"{path}: CSV header lacks a text column")
            texts = [row["text"] for row in reader]
    else:
        with path.open(encoding="utf-8") as f:
            for line_no, line in enumerate(f, 1):
                if not line.strip():
                    continue
                obj = json.loads(line)
                if "_config" in obj:
                    continue
                if not isinstance(obj.get("text"), str):
                    raise ValueError(f"{path}: missing text at line {line_no}")
                texts.append(obj["text"])
    if not texts:
        raise ValueError(f"{path}: corpus has no documents")
    return texts


def write_emb1(path, rows):
    rows = np.asarray(rows, dtype="<f4")
    n, dim = rows.shape
    tmp = Path(str(path) + ".tmp")
    with tmp.open("wb") as f:
        f.write(b"EMB1")
        f.write(struct.pack("<II", n, dim))
        f.write(np.ascontiguousarray(rows).tobytes())
    tmp.replace(path)


def normalize(rows):
    rows = np.asarray(rows, dtype=np.float64)
    norms = np.linalg.norm(rows, axis=1, keepdims=True)
    norms[norms == 0] = 1.0
    return rows / norms


def export_embeddings(input_path, output_path, model=DEFAULT_MODEL, batch_size=32, encoder=None):
    texts = read_texts(input_path)
    if encoder is None:
        from sentence_transformers import SentenceTransformer

        encoder = SentenceTransformer(model, device="cpu")
    rows = encoder.encode(texts, batch_size=batch_size, show_progress_bar=False, convert_to_numpy=True)
    rows = normalize(rows)
    if rows.shape[0] != len(texts):
        raise RuntimeError(f"encoder returned {rows.shape[0]} rows for {len(texts)} documents")
    write_emb1(output_path, rows)
    config = {"command": "embed-export", "input": str(input_path), "model": model, "batch_size": batch_size,
              "n_docs": int(rows.shape[0]), "dim": int(rows.shape[1])}
    Path(str(output_path) + ".config.json").write_text(json.dumps(config, sort_keys=True) + "\n")
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--input", required=True, help="raw corpus (.jsonl or .csv)")
    parser.add_argument("--output", required=True, help="EMB1 file")
    parser.add_argument("--model", default=DEFAULT_MODEL, help="sentence-transformers model id or path")
    parser.add_argument("--batch-size", type=int, default=32)
    args = parser.parse_args(argv)
    if args.batch_size < 1:
        parser.error("--batch-size must be positive")
    try:
        export_embeddings(args.input, args.output, args.model, args.batch_size)
    except (OSError, ValueError, RuntimeError) as e:
        print(f"embed-export: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
