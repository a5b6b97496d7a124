/**
 * Cell coloring: intensity alone maps to a grey level; when a phase
 * angle is present and meaningful, hue encodes the angle and lightness
 * the intensity, so complex boards become visibly colorful.
 */

const ANGLE_EPS = 1e-6;

export function greyLevel(intensity: number): number {
  const clamped = Math.max(0, Math.min(1, intensity));
  return Math.round(clamped * 255);
}

/** Angle in (-pi, pi] to a hue in [0, 360). */
export function angleToHue(angle: number): number {
  const deg = (angle * 180) / Math.PI;
  return ((deg % 360) + 360) % 360;
}

export function cellColor(intensity: number, angle: number | null): string {
  if (angle === null || Math.abs(angle) < ANGLE_EPS || Math.abs(Math.abs(angle) - Math.PI) < ANGLE_EPS) {
    // Real cells (angle 0 or pi) stay grey; sign is already encoded in
    // the magnitude display convention.
    const g = greyLevel(intensity);
    return `rgb(${g}, ${g}, ${g})`;
  }
  const lightness = Math.round(Math.max(0, Math.min(1, intensity)) * 100);
  return `hsl(${angleToHue(angle).toFixed(1)}, 80%, ${lightness}%)`;
}

/** True when any cell would render with a non-grey hue. */
export function hasVisibleHue(angles: number[][] | null): boolean {
  if (!angles) return false;
  return angles.some((row) =>
    row.some((a) => Math.abs(a) >= ANGLE_EPS && Math.abs(Math.abs(a) - Math.PI) >= ANGLE_EPS),
  );
}
