"""Gap-encode a cover, read one clique back by index, and round-trip through a file."""
import tempfile
from pathlib import Path

from dcc.constructors import global_admissibility
from dcc.encoding import decode_clique, decode_cover, encode_cover, read_encoded, write_encoded
from dcc.generators import gen_er

c = global_admissibility(gen_er(300, 0.3, seed=4)).cover
e = encode_cover(c)
print(f"cliques={e.k} ids={c.size} payload bytes={len(e.payload)} "
      f"({len(e.payload) / c.size:.2f} bytes per id)")
print("clique 10:", decode_clique(e, 10), "==", list(c.cliques[10]))
with tempfile.TemporaryDirectory() as tmp:
    p = Path(tmp) / "c.dcce"
    write_encoded(e, p)
    print("file bytes:", p.stat().st_size, "round trip ok:", decode_cover(read_encoded(p)) == c)
