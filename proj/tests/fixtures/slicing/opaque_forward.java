public class OpaqueForwardController implements ActionListener {
  public void actionPerformed(ActionEvent e) {
    int total = 0;
    if (e.getActionCommand().equals("go")) {
      total = compute();
    }
    synchronized (this) {
      log(total);
    }
  }
}
