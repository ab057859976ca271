"""Save a grid: original / reconstruction / do(d=+1) for visual inspection."""
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import torch

sys.path.insert(0, "/root/pkg/src")
torch.set_num_threads(1)

from causalgen.cf.engine import CounterfactualQuery, generate_counterfactual
from causalgen.data.store import load as load_dataset
from causalgen.evalh.oracles import load_oracles
from causalgen.nn.checkpoint import load_checkpoint
from causalgen.scm.model import Intervention

WS = "/root/pkg/artifacts/workspace"
ckpt = sys.argv[1]
out = sys.argv[2]

model, _ = load_checkpoint(ckpt)
model.eval()
test = load_dataset(f"{WS}/datasets/test_full")
oracles = load_oracles(f"{WS}/oracles.pt")

n = 10
fig, axes = plt.subplots(3, n, figsize=(2 * n, 6.5))
rng = np.random.default_rng(0)
idxs = rng.choice(len(test), n, replace=False)
for col, idx in enumerate(idxs):
    rec = test.record(int(idx))
    d = int(rec.values["d"])
    x = test.image(int(idx))
    res_id = generate_counterfactual(model, CounterfactualQuery(x=x, attrs=rec))
    do_d = (d + 1) % 10
    res_cf = generate_counterfactual(model, CounterfactualQuery(
        x=x, attrs=rec, interventions=Intervention({"d": do_d})))

    def oracle_d(img):
        t = torch.from_numpy(img[None].astype(np.float32)).permute(0, 3, 1, 2)
        return int(oracles.predict("d", t)[0])

    axes[0, col].imshow(x); axes[0, col].set_title(f"x d={d}", fontsize=8)
    axes[1, col].imshow(res_id.x_cf)
    axes[1, col].set_title(f"recon o={oracle_d(res_id.x_cf)}", fontsize=8)
    axes[2, col].imshow(res_cf.x_cf)
    axes[2, col].set_title(f"do(d={do_d}) o={oracle_d(res_cf.x_cf)}", fontsize=8)
for ax in axes.flat:
    ax.axis("off")
fig.tight_layout()
fig.savefig(out, dpi=80)
print("wrote", out)
