/**
 * Session-level click dedup: expanding the same posting twice in one
 * session must emit exactly one feedback event, so idle re-expansion
 * cannot inflate the feedback signal.
 */
export class SessionClickDedup {
  private readonly seen = new Set<string>();

  /** True exactly once per posting id per session. */
  shouldEmit(postingId: string): boolean {
    if (this.seen.has(postingId)) return false;
    this.seen.add(postingId);
    return true;
  }

  get count(): number {
    return this.seen.size;
  }
}
