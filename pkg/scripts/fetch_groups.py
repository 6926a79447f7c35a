#!/usr/bin/env python3
"""Fetch the large permutation groups used by the requires-data tests.

Downloads ATLAS-style MeatAxe permutation files (one generator per file,
text mode 12), converts them to the .grp format this package reads, sanity
checks degree and group order, and records SHA-256 sums in data/SHA256SUMS.
On the first successful fetch the sums are recorded; later fetches must
reproduce them bit for bit.

Usage:
    python3 scripts/fetch_groups.py g24_416
    python3 scripts/fetch_groups.py tits_1755 --slug TF42G1-p1755B0
    python3 scripts/fetch_groups.py g24_1365 --from-files a.m1 a.m2

The default slugs follow the usual ATLAS naming but the server's catalogue
is the authority; see docs/data.md when a slug 404s or the converted group
fails its order check.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import urllib.request

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from orbitalg import PermutationGroup, Permutation, save_group  # noqa: E402

BASE = "http://atlas.math.rwth-aachen.de/Atlas/v3"

# name -> (atlas directory, default slug, degree, group order, stabilizer order)
TARGETS = {
    "g24_416": ("exc/G24", "G24G1-p416B0", 416, 251_596_800, 604_800),
    "g24_1365": ("exc/G24", "G24G1-p1365aB0", 1365, 251_596_800, 184_320),
    "g24_4095": ("exc/G24", "G24G1-p4095B0", 4095, 251_596_800, 61_440),
    "tits_1755": ("spor/TF42", "TF42G1-p1755B0", 1755, 17_971_200, 10_240),
    "tits_2925": ("spor/TF42", "TF42G1-p2925B0", 2925, 17_971_200, 6_144),
}


def parse_meataxe_perm(text: str, degree: int) -> Permutation:
    """Text MeatAxe permutation: header ints, then 1-based images."""
    tokens = text.split()
    if len(tokens) < 4:
        raise SystemExit("meataxe file too short to hold a header")
    header = [int(t) for t in tokens[:4]]
    if header[0] not in (12, 13):
        raise SystemExit(f"not a permutation file (mode {header[0]}, expected 12 or 13)")
    n = header[2]
    if n != degree:
        raise SystemExit(f"meataxe degree {n} does not match expected {degree}")
    images = [int(t) - 1 for t in tokens[4 : 4 + n]]
    if len(images) != n:
        raise SystemExit(f"expected {n} images, found {len(images)}")
    return Permutation(images)


def fetch(url: str) -> bytes:
    print(f"fetching {url}")
    with urllib.request.urlopen(url, timeout=60) as resp:
        return resp.read()


def sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def read_sums(path: str) -> dict[str, str]:
    sums = {}
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    digest, name = line.split(None, 1)
                    sums[name.strip()] = digest
    return sums


def write_sums(path: str, sums: dict[str, str]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# sha256 of fetched inputs and converted .grp files\n")
        for name in sorted(sums):
            fh.write(f"{sums[name]}  {name}\n")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("name", choices=sorted(TARGETS), help="which group to fetch")
    ap.add_argument("--base", default=BASE, help="ATLAS server base URL")
    ap.add_argument("--slug", default=None, help="override the representation slug")
    ap.add_argument("--dir", dest="atlas_dir", default=None, help="override the ATLAS directory")
    ap.add_argument("--out", default=None, help="output .grp path (default data/<name>.grp)")
    ap.add_argument(
        "--from-files",
        nargs=2,
        metavar=("M1", "M2"),
        default=None,
        help="convert two already-downloaded meataxe files instead of fetching",
    )
    args = ap.parse_args()

    atlas_dir, slug, degree, order, stab_order = TARGETS[args.name]
    atlas_dir = args.atlas_dir or atlas_dir
    slug = args.slug or slug
    root = os.path.join(os.path.dirname(__file__), "..")
    out = args.out or os.path.join(root, "data", f"{args.name}.grp")
    sums_path = os.path.join(root, "data", "SHA256SUMS")
    os.makedirs(os.path.dirname(out), exist_ok=True)

    raws = []
    sources = []
    if args.from_files:
        for path in args.from_files:
            with open(path, "rb") as fh:
                raws.append(fh.read())
            sources.append(os.path.basename(path))
    else:
        for i in (1, 2):
            url = f"{args.base}/{atlas_dir}/{slug}.m{i}"
            raws.append(fetch(url))
            sources.append(f"{slug}.m{i}")

    sums = read_sums(sums_path)
    for raw, src in zip(raws, sources):
        digest = sha256(raw)
        if src in sums and sums[src] != digest:
            raise SystemExit(f"{src}: sha256 {digest} does not match recorded {sums[src]}")
        sums[src] = digest

    gens = [parse_meataxe_perm(raw.decode("ascii"), degree) for raw in raws]
    group = PermutationGroup(gens, degree, metadata={"name": args.name})
    got_order = group.order()
    if got_order != order:
        raise SystemExit(
            f"converted group has order {got_order}, expected {order}; "
            "wrong representation slug? see docs/data.md"
        )
    got_stab = group.point_stabilizer(0).order()
    print(f"degree {degree}, order {got_order}, point stabilizer order {got_stab}")
    if got_stab != stab_order:
        print(
            f"warning: stabilizer order {got_stab} differs from the expected {stab_order}; "
            "this is a different (possibly equivalent-degree) representation"
        )

    save_group(group, out)
    with open(out, "rb") as fh:
        sums[os.path.basename(out)] = sha256(fh.read())
    write_sums(sums_path, sums)
    print(f"wrote {out} and updated {sums_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
