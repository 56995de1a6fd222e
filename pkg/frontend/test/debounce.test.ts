import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { debounce } from "../src/debounce.js";

describe("debounce", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("fires once on the trailing edge with the last arguments", () => {
    const calls: number[] = [];
    const fn = debounce((x: number) => calls.push(x), 150);
    fn(1);
    fn(2);
    fn(3);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(149);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual([3]);
  });

  it("restarts the window on each call", () => {
    const calls: number[] = [];
    const fn = debounce((x: number) => calls.push(x), 150);
    fn(1);
    vi.advanceTimersByTime(100);
    fn(2);
    vi.advanceTimersByTime(100);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(50);
    expect(calls).toEqual([2]);
  });

  it("cancel drops the pending call", () => {
    const calls: number[] = [];
    const fn = debounce((x: number) => calls.push(x), 150);
    fn(1);
    fn.cancel();
    vi.advanceTimersByTime(500);
    expect(calls).toEqual([]);
  });

  it("flush invokes immediately and clears the timer", () => {
    const calls: number[] = [];
    const fn = debounce((x: number) => calls.push(x), 150);
    fn(7);
    fn.flush();
    expect(calls).toEqual([7]);
    vi.advanceTimersByTime(500);
    expect(calls).toEqual([7]);
  });

  it("flush with nothing pending is a no-op", () => {
    const calls: number[] = [];
    const fn = debounce((x: number) => calls.push(x), 150);
    fn.flush();
    expect(calls).toEqual([]);
  });
});
