// Spawns the real assessment service for the UI tests, so the wizard is
// exercised end to end against the actual API rather than a mock.

import { spawn } from 'node:child_process';
import { mkdtempSync, rmSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import type { GlobalSetupContext } from 'vitest/node';

export default async function setup({ provide }: GlobalSetupContext) {
  const port = 18000 + Math.floor(Math.random() * 20000);
  const dataDir = mkdtempSync(join(tmpdir(), 'mdsw-ui-'));
  const child = spawn(
    'python3',
    ['-m', 'mdsw.cli', 'serve', '--port', String(port), '--data-dir', dataDir],
    { stdio: ['ignore', 'pipe', 'pipe'] },
  );
  let output = '';
  child.stdout?.on('data', (chunk) => (output += chunk));
  child.stderr?.on('data', (chunk) => (output += chunk));

  const base = `http://127.0.0.1:${port}`;
  let up = false;
  for (let attempt = 0; attempt < 150 && !up; attempt++) {
    if (child.exitCode !== null) {
      throw new Error(`service exited early (code ${child.exitCode}): ${output}`);
    }
    try {
      const response = await fetch(`${base}/rulebooks`);
      up = response.ok;
    } catch {
      await new Promise((resolve) => setTimeout(resolve, 100));
    }
  }
  if (!up) {
    child.kill();
    throw new Error(`service never came up on ${base}: ${output}`);
  }

  provide('apiBase', base);
  return () => {
    child.kill();
    rmSync(dataDir, { recursive: true, force: true });
  };
}

declare module 'vitest' {
  export interface ProvidedContext {
    apiBase: string;
  }
}
