/** Model for the interactive sememe-tree diagram, built from the JSON
 * render returned by the API. */

import type { TreeHead, TreeNode } from "./types.js";

export const DEFAULT_COLLAPSE_DEPTH = 3;

export function headLabel(head: TreeHead): string {
  if ("sememe" in head) {
    return head.sememe;
  }
  if ("placeholder" in head) {
    return head.placeholder;
  }
  return `"${head.literal}"`;
}

export function headSememeRef(head: TreeHead): string | null {
  return "sememe" in head ? head.sememe : null;
}

export function nodeCount(node: TreeNode): number {
  let count = 1;
  for (const child of node.children) {
    count += nodeCount(child.tree);
  }
  return count;
}

/** Tracks which nodes hide their children.  Node identity is the index
 * path from the root ("0", "0.1", ...), stable for an immutable tree. */
export class TreeState {
  private collapsed = new Set<string>();

  constructor(root: TreeNode, collapseDeeperThan = DEFAULT_COLLAPSE_DEPTH) {
    const visit = (node: TreeNode, path: string, depth: number) => {
      if (depth >= collapseDeeperThan && node.children.length > 0) {
        this.collapsed.add(path);
      }
      node.children.forEach((child, i) =>
        visit(child.tree, `${path}.${i}`, depth + 1),
      );
    };
    visit(root, "0", 0);
  }

  isCollapsed(path: string): boolean {
    return this.collapsed.has(path);
  }

  toggle(path: string): void {
    if (this.collapsed.has(path)) {
      this.collapsed.delete(path);
    } else {
      this.collapsed.add(path);
    }
  }

  /** Nodes currently reachable without expanding anything. */
  visibleCount(root: TreeNode): number {
    const visit = (node: TreeNode, path: string): number => {
      let count = 1;
      if (!this.isCollapsed(path)) {
        node.children.forEach((child, i) => {
          count += visit(child.tree, `${path}.${i}`);
        });
      }
      return count;
    };
    return visit(root, "0");
  }
}
