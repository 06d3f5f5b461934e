"""A resumable scan for indices n with s(n) = 0.

Run it twice: the second run picks up from the checkpoint file.
"""

import sys
from pathlib import Path

from prodsum import ScanCheckpoint, load_checkpoint, save_checkpoint, scan_zero_terms

path = Path(sys.argv[1] if len(sys.argv) > 1 else "zero_terms.ckpt")
target = int(sys.argv[2]) if len(sys.argv) > 2 else 5000
chunk = 1000

cp = load_checkpoint(path) if path.exists() else ScanCheckpoint()
print(f"starting at n={cp.next_n}")
while cp.next_n <= target:
    cp = scan_zero_terms(cp, min(chunk, target - cp.next_n + 1))
    save_checkpoint(cp, path)
    print(f"  through n={cp.next_n - 1}: {len(cp.zero_indices)} zero terms so far")

print("zero indices:", cp.zero_indices)
