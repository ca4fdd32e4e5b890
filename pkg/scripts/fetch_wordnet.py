#!/usr/bin/env python3
"""Fetch the Princeton WordNet 3.0 database into third_party/wordnet-3.0/dict.

The files come from the ``wndb-with-exceptions`` npm package, which wraps
the unmodified WNdb-3.0 tarball (index and data files) and adds the four
morphology exception lists from the same release.

    python scripts/fetch_wordnet.py [--tarball wndb-with-exceptions-3.0.2.tgz] [--dest DIR]
"""

import argparse
import hashlib
import io
import sys
import tarfile
import urllib.request
from pathlib import Path

URL = "https://registry.npmjs.org/wndb-with-exceptions/-/wndb-with-exceptions-3.0.2.tgz"
SHA256 = "060cd281dc18395a723ff7dac9a9b1a9356b0da95fc29c363c5b4ec95e7a6a43"
ROOT = Path(__file__).resolve().parents[1]
POS = ("noun", "verb", "adj", "adv")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tarball", help="local copy of the npm tarball")
    ap.add_argument("--dest", default=str(ROOT / "third_party" / "wordnet-3.0"))
    args = ap.parse_args()

    if args.tarball:
        raw = Path(args.tarball).read_bytes()
    else:
        with urllib.request.urlopen(URL, timeout=120) as resp:
            raw = resp.read()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != SHA256:
        sys.exit(f"checksum mismatch: {digest}")

    dest = Path(args.dest)
    (dest / "dict").mkdir(parents=True, exist_ok=True)
    with tarfile.open(fileobj=io.BytesIO(raw), mode="r:gz") as outer:
        inner_bytes = outer.extractfile("package/WNdb-3.0.tar.gz").read()
        for pos in POS:
            data = outer.extractfile(f"package/data/{pos}.exc").read()
            (dest / "dict" / f"{pos}.exc").write_bytes(data)
        (dest / "LICENSE").write_bytes(outer.extractfile("package/LICENSE").read())
    with tarfile.open(fileobj=io.BytesIO(inner_bytes), mode="r:gz") as inner:
        for member in inner.getmembers():
            name = Path(member.name).name
            if member.isfile() and name.startswith(("index.", "data.")):
                (dest / "dict" / name).write_bytes(inner.extractfile(member).read())
    print(f"WordNet 3.0 written to {dest / 'dict'}")


if __name__ == "__main__":
    main()
