// Trailing-edge debounce used to keep slider drags from flooding the
// preview endpoint while still reading as "live".

export interface Debounced<A extends unknown[]> {
  call: (...args: A) => void;
  cancel: () => void;
  readonly delayMs: number;
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  delayMs: number,
): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  return {
    delayMs,
    call(...args: A) {
      if (timer !== null) clearTimeout(timer);
      timer = setTimeout(() => {
        timer = null;
        fn(...args);
      }, delayMs);
    },
    cancel() {
      if (timer !== null) clearTimeout(timer);
      timer = null;
    },
  };
}
