#!/usr/bin/env python3
"""Plot the CSV files written by `lcs figure1`, `lcs figure2` and `lcs figure3`.

    lcs figure1 --out fig1.csv
    lcs figure2 --out fig2_su2.csv
    lcs figure2 --model su11 --out fig2_su11.csv
    lcs figure3 --model su11 --out fig3.csv
    python docs/plot_figures.py fig1.csv fig2_su2.csv fig2_su11.csv fig3.csv -o figures.png
"""

import argparse
import csv
import re

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    return {name: [float(r[i]) for r in body] for i, name in enumerate(header)}


def circle_panels(data, axes, title):
    t = data["time"]
    for key in data:
        m = re.fullmatch(r"R_(.+)", key)
        if not m:
            continue
        tag = m.group(1)
        axes[0].plot(t, data[key], label=tag)
        line, = axes[1].plot(t, data["z_re_" + tag], label=tag)
        axes[1].plot(t, data["z_im_" + tag], ":", color=line.get_color())
    axes[0].set(xlabel="t", ylabel="R(t)", title=title)
    axes[1].set(xlabel="t", ylabel="z(t)  (Re solid, Im dotted)", title=title + ": circle centers")
    for ax in axes:
        ax.legend(fontsize="small")


def purity_panel(data, ax, title):
    for key in data:
        if key.startswith("purity_"):
            style = "--" if key.endswith("_admix") else "-"
            ax.plot(data["time"], data[key], style, label=key[len("purity_"):])
    ax.set(xlabel="t", ylabel="Tr rho^2", title=title)
    ax.legend(fontsize="small")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("fig1")
    ap.add_argument("fig2_su2")
    ap.add_argument("fig2_su11")
    ap.add_argument("fig3")
    ap.add_argument("-o", "--output", default="figures.png")
    args = ap.parse_args()

    fig, ax = plt.subplots(3, 2, figsize=(11, 13))
    circle_panels(read(args.fig1), ax[0], "spin-boson")
    purity_panel(read(args.fig2_su2), ax[1][0], "qubit purity")
    purity_panel(read(args.fig2_su11), ax[1][1], "oscillator purity")
    circle_panels(read(args.fig3), ax[2], "oscillator bath")
    fig.tight_layout()
    fig.savefig(args.output, dpi=120)
    print("wrote", args.output)


if __name__ == "__main__":
    main()
