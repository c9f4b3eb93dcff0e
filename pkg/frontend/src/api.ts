import type {
  CaseDoc,
  EvidenceItem,
  IntentionResolution,
  NextPayload,
  RulebookRef,
  SessionState,
  SessionSummary,
  VerdictDoc,
} from './types';

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let code = 'http-error';
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = await response.json();
    if (body && typeof body.code === 'string') {
      code = body.code;
      message = body.message ?? message;
    }
  } catch {
    // non-JSON error body: keep the HTTP status text
  }
  return new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(public readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      headers: { 'content-type': 'application/json' },
      ...init,
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  listRulebooks(): Promise<{ rulebooks: RulebookRef[] }> {
    return this.request('/rulebooks');
  }

  createSession(
    rulebook: string,
    seedCase?: Partial<CaseDoc>,
  ): Promise<{ session: SessionSummary; next: NextPayload }> {
    const body: Record<string, unknown> = { rulebook };
    if (seedCase) body.case = seedCase;
    return this.request('/sessions', { method: 'POST', body: JSON.stringify(body) });
  }

  getSession(id: string): Promise<SessionState> {
    return this.request(`/sessions/${id}`);
  }

  submitAnswer(
    id: string,
    node: string,
    answer: boolean,
  ): Promise<{ session: SessionSummary; next: NextPayload }> {
    return this.request(`/sessions/${id}/answers`, {
      method: 'POST',
      body: JSON.stringify({ node, answer }),
    });
  }

  attachEvidence(
    id: string,
    item: EvidenceItem,
  ): Promise<{ session: SessionSummary; intention: IntentionResolution; next: NextPayload }> {
    return this.request(`/sessions/${id}/evidence`, {
      method: 'POST',
      body: JSON.stringify(item),
    });
  }

  getVerdict(id: string): Promise<VerdictDoc> {
    return this.request(`/sessions/${id}/verdict`);
  }

  reportUrl(id: string, format: 'json' | 'md'): string {
    return `${this.baseUrl}/sessions/${id}/report?format=${format}`;
  }

  async fetchReport(id: string, format: 'json' | 'md'): Promise<string> {
    const response = await fetch(this.reportUrl(id, format));
    if (!response.ok) throw await parseError(response);
    return response.text();
  }
}
